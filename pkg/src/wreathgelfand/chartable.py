"""Character tables of finite groups.

Tables come from three places: exact integer tables of S_k built with the
Murnaghan-Nakayama rule, closed-form complex tables for cyclic and dihedral
groups, and JSON documents for anything else (see ``load_table``).
"""

from __future__ import annotations

import cmath
import json
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .partitions import (
    CycleType,
    Partition,
    SizeLimitError,
    class_size,
    enumerate_partitions,
    power_cycle_type,
)

Scalar = Union[int, Fraction, complex]

EXACT = "exact"
APPROX = "approx"
DEFAULT_TABLE_TOL = 1e-9
MAX_SYMMETRIC_DEGREE = 30


class TableParseError(ValueError):
    """The table document is malformed."""


class TableValidationError(ValueError):
    """A table failed validation; ``report`` holds the details."""

    def __init__(self, message: str, report: "ValidationReport | None" = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ConjugacyClass:
    label: str
    size: int


@dataclass(frozen=True)
class Irrep:
    label: str
    values: tuple

    @property
    def dimension(self) -> int:
        d = self.values[0]
        return int(round(d.real)) if isinstance(d, complex) else int(d)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Classes, power maps and irreducible characters of a finite group.

    ``power_maps[m][c]`` is the index of the class containing x**m for x in
    class ``c``, for every m in 2..exponent.  ``classes[0]`` is the identity.
    """

    name: str
    order: int
    exponent: int
    classes: tuple[ConjugacyClass, ...]
    power_maps: Mapping[int, tuple[int, ...]]
    irreps: tuple[Irrep, ...]
    backend: str = EXACT
    tol: float = DEFAULT_TABLE_TOL
    # Cycle types for symmetric tables; used for label lookup.
    cycle_types: tuple[CycleType, ...] | None = field(default=None, repr=False)
    partitions: tuple[Partition, ...] | None = field(default=None, repr=False)

    @property
    def exact(self) -> bool:
        return self.backend == EXACT

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def dimensions(self) -> tuple[int, ...]:
        return tuple(r.dimension for r in self.irreps)

    def power_class(self, c: int, m: int) -> int:
        """Class index of x**m for x in class ``c``."""
        m %= self.exponent
        if m == 0:
            return 0
        if m == 1:
            return c
        return self.power_maps[m][c]

    def character(self, i: int) -> tuple:
        return self.irreps[i].values

    def irrep_index(self, label: str) -> int:
        for i, r in enumerate(self.irreps):
            if r.label == label:
                return i
        raise KeyError(f"no irrep labelled {label!r} in {self.name}")

    def class_index(self, label: str) -> int:
        for i, c in enumerate(self.classes):
            if c.label == label:
                return i
        raise KeyError(f"no class labelled {label!r} in {self.name}")


class _SymmetricPowerMaps(Mapping):
    """Power maps of S_k computed on demand from cycle types.

    The exponent lcm(1..k) grows quickly, so the maps are not stored.
    """

    def __init__(self, cycle_types: tuple[CycleType, ...], exponent: int):
        self._types = cycle_types
        self._index = {t: i for i, t in enumerate(cycle_types)}
        self._exponent = exponent

    @lru_cache(maxsize=1024)
    def __getitem__(self, m: int) -> tuple[int, ...]:
        if not 2 <= m <= self._exponent:
            raise KeyError(m)
        return tuple(self._index[power_cycle_type(t, m)] for t in self._types)

    def __iter__(self) -> Iterator[int]:
        return iter(range(2, self._exponent + 1))

    def __len__(self) -> int:
        return max(self._exponent - 1, 0)

    def __hash__(self) -> int:
        return id(self)


def partition_label(lam: Partition) -> str:
    return ".".join(map(str, lam)) if lam else "0"


# -- Murnaghan-Nakayama ---------------------------------------------------


def _beta_set(lam: Partition) -> tuple[int, ...]:
    n = len(lam)
    return tuple(lam[i] + n - 1 - i for i in range(n))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        if b - r < 0 or (b - r) in occupied:
            continue
        # Beads jumped over = leg length (height) of the removed rim hook.
        height = sum(1 for x in beta if b - r < x < b)
        moved = [x if x != b else b - r for x in beta]
        total += (-1) ** height * _mn(_from_beta(moved), rest)
    return total


def mn_character(lam: Partition, mu: CycleType) -> int:
    """chi_lam evaluated on the class of cycle type ``mu``."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


# -- built-in families -----------------------------------------------------


def symmetric_table(k: int) -> CharacterTable:
    if not 1 <= k <= MAX_SYMMETRIC_DEGREE:
        raise SizeLimitError(f"symmetric_table needs 1 <= k <= {MAX_SYMMETRIC_DEGREE}")
    parts = tuple(enumerate_partitions(k))
    types = tuple(reversed(parts))  # identity class (1^k) first
    exponent = math.lcm(*range(1, k + 1))
    classes = tuple(ConjugacyClass(partition_label(t), class_size(t)) for t in types)
    irreps = tuple(
        Irrep(partition_label(lam), tuple(mn_character(lam, t) for t in types))
        for lam in parts
    )
    return CharacterTable(
        name=f"S{k}",
        order=math.factorial(k),
        exponent=exponent,
        classes=classes,
        power_maps=_SymmetricPowerMaps(types, exponent),
        irreps=irreps,
        backend=EXACT,
        cycle_types=types,
        partitions=parts,
    )


def _root(j: int, m: int) -> complex:
    return cmath.exp(2j * math.pi * j / m)


def cyclic_table(m: int) -> CharacterTable:
    if m < 1:
        raise ValueError("m must be positive")
    classes = tuple(ConjugacyClass(f"g^{c}" if c else "e", 1) for c in range(m))
    power_maps = {p: tuple(c * p % m for c in range(m)) for p in range(2, m + 1)}
    irreps = tuple(
        Irrep(f"chi{j}", tuple(_root(j * c % m, m) for c in range(m))) for j in range(m)
    )
    return CharacterTable(
        name=f"C{m}", order=m, exponent=m, classes=classes,
        power_maps=power_maps, irreps=irreps, backend=APPROX,
    )


def dihedral_table(m: int) -> CharacterTable:
    """Dihedral group of order 2m (symmetries of the m-gon), m >= 3."""
    if m < 3:
        raise ValueError("dihedral_table needs m >= 3")
    half = m // 2
    even = m % 2 == 0
    # rotation classes {r^j, r^-j}, j = 1..floor(m/2); r^{m/2} is central for even m
    rot = list(range(1, half + 1))
    classes = [ConjugacyClass("e", 1)]
    classes += [ConjugacyClass(f"r^{j}", 1 if even and j == half else 2) for j in rot]
    if even:
        classes += [ConjugacyClass("s", half), ConjugacyClass("sr", half)]
    else:
        classes.append(ConjugacyClass("s", m))
    nrot = 1 + len(rot)
    refl = list(range(nrot, len(classes)))

    def rot_class(j: int) -> int:
        j %= m
        return min(j, m - j)  # index coincides with j for 0..half

    exponent = math.lcm(m, 2)
    power_maps = {}
    for p in range(2, exponent + 1):
        img = [rot_class(j * p) for j in range(nrot)]
        img += [c if p % 2 else 0 for c in refl]
        power_maps[p] = tuple(img)

    def row(rot_vals, refl_vals) -> tuple:
        return tuple(complex(v) for v in list(rot_vals) + list(refl_vals))

    irreps = []
    if even:
        for a, (cr, cs) in enumerate([(1, 1), (1, -1), (-1, 1), (-1, -1)]):
            irreps.append(
                Irrep(f"lin{a}", row([cr**j for j in range(nrot)], [cs, cs * cr]))
            )
        hs = range(1, half)
    else:
        irreps.append(Irrep("lin0", row([1] * nrot, [1])))
        irreps.append(Irrep("lin1", row([1] * nrot, [-1])))
        hs = range(1, half + 1)
    for h in hs:
        vals = [2 * math.cos(2 * math.pi * h * j / m) for j in range(nrot)]
        irreps.append(Irrep(f"psi{h}", row(vals, [0] * len(refl))))
    return CharacterTable(
        name=f"D{m}", order=2 * m, exponent=exponent, classes=tuple(classes),
        power_maps=power_maps, irreps=tuple(irreps), backend=APPROX,
    )


# -- arithmetic -----------------------------------------------------------


def inner_product(f: Sequence[Scalar], g: Sequence[Scalar], table: CharacterTable) -> Scalar:
    """<f, g> = (1/|G|) sum_C |C| f(C) conj(g(C))."""
    if len(f) != table.num_classes or len(g) != table.num_classes:
        raise ValueError("class function length does not match the table")
    if table.exact:
        total = sum(c.size * a * b for c, a, b in zip(table.classes, f, g))
        return Fraction(total, table.order)
    total = sum(c.size * a * complex(b).conjugate() for c, a, b in zip(table.classes, f, g))
    return total / table.order


def is_real(table: CharacterTable, i: int) -> bool:
    if table.exact:
        return True
    return all(abs(complex(v).imag) < table.tol for v in table.irreps[i].values)


def to_integer(value: Scalar, tol: float = 1e-6) -> int:
    """Round a provably integral quantity, refusing if it is not close."""
    if isinstance(value, (int, Fraction)):
        if Fraction(value).denominator != 1:
            raise NumericalIntegralityError(f"non-integral exact value {value}")
        return int(value)
    z = complex(value)
    n = round(z.real)
    if abs(z - n) >= tol:
        raise NumericalIntegralityError(f"value {z} is not within {tol} of an integer")
    return int(n)


class NumericalIntegralityError(ArithmeticError):
    """A quantity that must be an integer was not (within tolerance)."""


# -- validation -----------------------------------------------------------


@dataclass
class ValidationReport:
    name: str
    row_residual: float
    column_residual: float
    size_sum_ok: bool
    dimension_sum_ok: bool
    power_maps_ok: bool
    failures: list[str]
    tol: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "row_residual": self.row_residual,
            "column_residual": self.column_residual,
            "size_sum_ok": self.size_sum_ok,
            "dimension_sum_ok": self.dimension_sum_ok,
            "power_maps_ok": self.power_maps_ok,
            "failures": list(self.failures),
        }


def _pair_residuals(table: CharacterTable):
    s = table.num_classes
    vals = [r.values for r in table.irreps]
    sizes = table.sizes
    exact = table.exact
    conj = (lambda x: x) if exact else (lambda x: complex(x).conjugate())
    rows = {}
    for i in range(len(vals)):
        for j in range(i, len(vals)):
            total = sum(sizes[c] * vals[i][c] * conj(vals[j][c]) for c in range(s))
            target = table.order if i == j else 0
            rows[i, j] = abs(total - target) / table.order
    cols = {}
    for c in range(s):
        cent = table.order // sizes[c] if table.order % sizes[c] == 0 else table.order / sizes[c]
        for d in range(c, s):
            total = sum(v[c] * conj(v[d]) for v in vals)
            target = cent if c == d else 0
            cols[c, d] = abs(total - target) / cent
    return rows, cols


def validate(table: CharacterTable, tol: float | None = None) -> ValidationReport:
    """Check class sizes, dimensions, orthogonality and power maps."""
    tol = table.tol if tol is None else tol
    failures: list[str] = []
    s = table.num_classes
    if len(table.irreps) != s:
        failures.append(f"table is not square: {len(table.irreps)} irreps, {s} classes")
    if table.classes[0].size != 1:
        failures.append("class sizes: the first class must be the identity (size 1)")
    size_ok = sum(table.sizes) == table.order
    if not size_ok:
        failures.append(f"class sizes sum to {sum(table.sizes)}, expected order {table.order}")
    for r in table.irreps:
        if len(r.values) != s:
            failures.append(f"irrep {r.label!r} has {len(r.values)} values, expected {s}")
    if len(table.irreps) != s or any(len(r.values) != s for r in table.irreps):
        return ValidationReport(table.name, math.inf, math.inf, size_ok, False, False, failures, tol)

    for r in table.irreps:
        d = r.values[0]
        dz = complex(d)
        if abs(dz.imag) > tol or abs(dz.real - round(dz.real)) > tol or round(dz.real) < 1:
            failures.append(f"irrep {r.label!r}: value at identity {d} is not a positive integer")
    dim_ok = sum(r.dimension**2 for r in table.irreps) == table.order
    if not dim_ok:
        failures.append("dimension sum: sum of squared dimensions differs from the order")

    rows, cols = _pair_residuals(table)
    row_res = float(max(rows.values())) if rows else 0.0
    col_res = float(max(cols.values())) if cols else 0.0
    if row_res > tol or col_res > tol:
        bad_irrep = _worst_member(rows, tol, len(table.irreps))
        bad_class = _worst_member(cols, tol, s)
        msg = f"orthogonality residual row={row_res:.3g} column={col_res:.3g}"
        if bad_irrep is not None:
            msg += f"; row {table.irreps[bad_irrep].label!r}"
        if bad_class is not None:
            msg += f", column {table.classes[bad_class].label!r}"
        failures.append(msg)

    pm_ok = _check_power_maps(table, failures)
    return ValidationReport(table.name, row_res, col_res, size_ok, dim_ok, pm_ok, failures, tol)


def _worst_member(pairs: dict, tol: float, n: int) -> int | None:
    score = [0.0] * n
    for (a, b), v in pairs.items():
        if v > tol:
            score[a] += float(v)
            score[b] += float(v)
    best = max(range(n), key=score.__getitem__)
    return best if score[best] > 0 else None


_POWER_PAIR_LIMIT = 24
_ADAMS_LIMIT = 8


def _check_power_maps(table: CharacterTable, failures: list[str]) -> bool:
    ok = True
    s = table.num_classes
    e = table.exponent
    if e > 1:
        if isinstance(table.power_maps, dict):
            missing = [m for m in range(2, e + 1) if m not in table.power_maps]
            if missing:
                failures.append(f"power maps missing for m={missing[:5]}")
                return False
        if any(x != 0 for x in table.power_maps[e]):
            failures.append(f"power map {e} (the exponent) must send every class to the identity")
            ok = False
    lim = min(e, _POWER_PAIR_LIMIT)
    for a in range(2, lim + 1):
        for b in range(2, lim + 1):
            for c in range(s):
                if table.power_class(table.power_class(c, b), a) != table.power_class(c, a * b):
                    failures.append(
                        f"power maps {a} and {b} do not compose to {a * b} at class "
                        f"{table.classes[c].label!r}"
                    )
                    return False
    # psi^m(chi)(x) = chi(x^m) is a virtual character: its multiplicities are integers.
    for m in range(2, min(e, _ADAMS_LIMIT) + 1):
        for i, r in enumerate(table.irreps):
            powered = [r.values[table.power_class(c, m)] for c in range(s)]
            for j, t in enumerate(table.irreps):
                v = complex(inner_product(powered, t.values, table))
                if abs(v - round(v.real)) > 1e-6:
                    failures.append(
                        f"power map {m} inconsistent with characters: <chi({r.label})^({m}), "
                        f"chi({t.label})> = {v:.4g}"
                    )
                    return False
    return ok


# -- file format ----------------------------------------------------------


def _encode(v, exact: bool):
    if exact:
        return int(v)
    z = complex(v)
    return [z.real, z.imag]


def table_to_dict(table: CharacterTable) -> dict:
    exact = table.exact
    return {
        "name": table.name,
        "order": table.order,
        "exponent": table.exponent,
        "backend": table.backend,
        "classes": [{"label": c.label, "size": c.size} for c in table.classes],
        "power_maps": {str(m): list(table.power_maps[m]) for m in range(2, table.exponent + 1)},
        "irreps": [
            {"label": r.label, "values": [_encode(v, exact) for v in r.values]}
            for r in table.irreps
        ],
    }


def render_table(table: CharacterTable) -> str:
    """Serialise ``table`` in the JSON table format."""
    return json.dumps(table_to_dict(table), indent=1)


def _decode(v, exact: bool, where: str):
    if exact:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TableParseError(f"{where}: exact backend accepts only integers, got {v!r}")
        return v
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if isinstance(v, list) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    raise TableParseError(f"{where}: expected a number or [re, im] pair, got {v!r}")


def table_from_dict(doc: dict, tol: float = DEFAULT_TABLE_TOL) -> CharacterTable:
    try:
        name = str(doc["name"])
        order = doc["order"]
        exponent = doc["exponent"]
        backend = doc["backend"]
        raw_classes = doc["classes"]
        raw_pm = doc["power_maps"]
        raw_irreps = doc["irreps"]
    except (KeyError, TypeError) as exc:
        raise TableParseError(f"missing key {exc}") from None
    if backend not in (EXACT, APPROX):
        raise TableParseError(f"backend must be 'exact' or 'approx', got {backend!r}")
    if not isinstance(order, int) or not isinstance(exponent, int) or order < 1 or exponent < 1:
        raise TableParseError("order and exponent must be positive integers")
    try:
        classes = tuple(ConjugacyClass(str(c["label"]), int(c["size"])) for c in raw_classes)
    except (KeyError, TypeError, ValueError) as exc:
        raise TableParseError(f"bad class entry: {exc}") from None
    s = len(classes)
    power_maps = {}
    if not isinstance(raw_pm, dict):
        raise TableParseError("power_maps must be an object")
    for key, img in raw_pm.items():
        try:
            m = int(key)
        except ValueError:
            raise TableParseError(f"power map key {key!r} is not an integer") from None
        if not isinstance(img, list) or len(img) != s or not all(
            isinstance(x, int) and 0 <= x < s for x in img
        ):
            raise TableParseError(f"power map {m}: expected {s} class indices")
        power_maps[m] = tuple(img)
    exact = backend == EXACT
    irreps = []
    for i, r in enumerate(raw_irreps):
        try:
            label, values = str(r["label"]), r["values"]
        except (KeyError, TypeError):
            raise TableParseError(f"irrep {i}: needs 'label' and 'values'") from None
        if not isinstance(values, list):
            raise TableParseError(f"irrep {label!r}: values must be an array")
        irreps.append(
            Irrep(label, tuple(_decode(v, exact, f"irrep {label!r} value {c}") for c, v in enumerate(values)))
        )
    return CharacterTable(
        name=name, order=order, exponent=exponent, classes=classes,
        power_maps=power_maps, irreps=tuple(irreps), backend=backend, tol=tol,
    )


def load_table(document: str, tol: float = DEFAULT_TABLE_TOL) -> CharacterTable:
    """Parse a JSON table document and validate it."""
    try:
        doc = json.loads(document)
    except json.JSONDecodeError as exc:
        raise TableParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise TableParseError("top level must be an object")
    table = table_from_dict(doc, tol=tol)
    report = validate(table)
    if not report.passed:
        raise TableValidationError(f"{table.name}: " + "; ".join(report.failures), report)
    return table


def tables_close(a: CharacterTable, b: CharacterTable, tol: float = 1e-9) -> bool:
    """Same classes, power maps and character values (within ``tol``)."""
    if (a.order, a.exponent, a.classes) != (b.order, b.exponent, b.classes):
        return False
    if [r.label for r in a.irreps] != [r.label for r in b.irreps]:
        return False
    for m in range(2, a.exponent + 1):
        if tuple(a.power_maps[m]) != tuple(b.power_maps[m]):
            return False
    return all(
        abs(complex(x) - complex(y)) <= tol
        for ra, rb in zip(a.irreps, b.irreps)
        for x, y in zip(ra.values, rb.values)
    )
