"""Gelfand verdicts for (G_n, K_n) and cracking-point search."""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .chartable import CharacterTable, is_real
from .wreath import (
    MULTIPLICITY_TOL,
    PiMultiset,
    decompose_m_pi,
    enumerate_pi,
    kron_multiplicity,
    dimension_sum_filter,
    rho_label,
    stabilizer,
)

GELFAND = "gelfand"
NOT_GELFAND = "not-gelfand"


@dataclass(frozen=True)
class Witness:
    pi: tuple[str, ...]
    rho: str
    coeff: int

    def as_dict(self) -> dict:
        return {"pi": list(self.pi), "rho": self.rho, "coeff": self.coeff}


@dataclass
class GelfandReport:
    gamma: str
    n: int
    verdict: str
    witness: Optional[Witness] = None
    examined: int = 0
    by_filter: int = 0
    by_kron: int = 0
    decomposed: int = 0
    exhaustive: bool = False

    @property
    def is_gelfand(self) -> bool:
        return self.verdict == GELFAND

    def as_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "n": self.n,
            "verdict": self.verdict,
            "witness": self.witness.as_dict() if self.witness else None,
            "counts": {
                "examined": self.examined,
                "dimension_sum_filter": self.by_filter,
                "kron_fast_path": self.by_kron,
                "decomposed": self.decomposed,
            },
        }


@dataclass
class CrackReport:
    gamma: str
    n_max: int
    cracking_point: Optional[int]
    levels: list[GelfandReport] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "n_max": self.n_max,
            "cracking_point": self.cracking_point,
            "result": (
                f"N={self.cracking_point}"
                if self.cracking_point is not None
                else f"no crack found up to {self.n_max}"
            ),
            "levels": [r.as_dict() for r in self.levels],
        }


@dataclass(frozen=True)
class _Outcome:
    path: str  # "filter" | "kron" | "full"
    witness: Optional[tuple[tuple, int]]  # (rho, coeff), first in irrep order


def _first_large(coeffs: dict) -> Optional[tuple[tuple, int]]:
    for rho, a in coeffs.items():
        if a >= 2:
            return rho, a
    return None


def examine_pi(pi: PiMultiset, tol: float = MULTIPLICITY_TOL, need_witness: bool = True) -> _Outcome:
    """Decide whether ``pi`` contributes a multiplicity >= 2.

    Order of attack: the dimension-sum filter, then the tensor-multiplicity
    shortcut when the stabilizer is trivial, then the full decomposition.
    """
    if dimension_sum_filter(pi, tol):
        wit = _first_large(decompose_m_pi(pi, tol)) if need_witness else ((), 2)
        return _Outcome("filter", wit)
    young = stabilizer(pi)
    if young.order == 1 and is_real(pi.gamma, pi.labels[-1]):
        a = kron_multiplicity(pi.gamma, pi.labels[:-1], pi.labels[-1], tol)
        rho = young.irreps[0]
        return _Outcome("kron", (rho, a) if a >= 2 else None)
    return _Outcome("full", _first_large(decompose_m_pi(pi, tol)))


def _examine_chunk(args) -> list[_Outcome]:
    pis, tol = args
    return [examine_pi(pi, tol, need_witness=False) for pi in pis]


def _chunks(seq, k):
    size = max(1, math.ceil(len(seq) / (4 * k)))
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def is_gelfand(
    gamma: CharacterTable,
    n: int,
    exhaustive: bool = False,
    workers: int = 1,
    tol: float = MULTIPLICITY_TOL,
) -> GelfandReport:
    """Scan every pi representative at level n; stop at the first multiplicity.

    Counts cover the representatives up to and including the witness (all of
    them in exhaustive mode), so reports do not depend on ``workers``.
    """
    pis = enumerate_pi(gamma, n)
    if workers > 1 and len(pis) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            jobs = [(c, tol) for c in _chunks(pis, workers)]
            outcomes = [o for part in pool.map(_examine_chunk, jobs) for o in part]
    else:
        outcomes = None

    report = GelfandReport(gamma.name, n, GELFAND, exhaustive=exhaustive)
    for idx, pi in enumerate(pis):
        out = outcomes[idx] if outcomes is not None else examine_pi(pi, tol, need_witness=False)
        report.examined += 1
        if out.path == "filter":
            report.by_filter += 1
        elif out.path == "kron":
            report.by_kron += 1
        else:
            report.decomposed += 1
        if out.witness is not None and report.witness is None:
            rho, a = examine_pi(pi, tol).witness
            report.verdict = NOT_GELFAND
            report.witness = Witness(pi.label_names(), rho_label(rho), a)
            if not exhaustive:
                break
    return report


def cracking_point(
    gamma: CharacterTable,
    n_max: int,
    workers: int = 1,
    tol: float = MULTIPLICITY_TOL,
) -> CrackReport:
    """First level n <= n_max at which the pair stops being a Gelfand pair."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    report = CrackReport(gamma.name, n_max, None)
    for n in range(1, n_max + 1):
        level = is_gelfand(gamma, n, workers=workers, tol=tol)
        report.levels.append(level)
        if not level.is_gelfand:
            report.cracking_point = n
            break
    abelian = all(d == 1 for d in gamma.dimensions)
    N = report.cracking_point
    if not abelian and N is not None and not 3 <= N <= gamma.order:
        warnings.warn(f"{gamma.name}: cracking point {N} lies outside [3, |Gamma|]")
    if abelian and N is not None:
        warnings.warn(f"{gamma.name} is abelian but cracked at {N}")
    return report


def all_decompositions(gamma: CharacterTable, n: int, tol: float = MULTIPLICITY_TOL):
    """(pi, coefficients) for every representative at level n."""
    return [(pi, decompose_m_pi(pi, tol)) for pi in enumerate_pi(gamma, n)]


def induced_dimension(pi: PiMultiset, rho) -> int:
    """dim of the G_n-irrep induced from (pi o omega) (x) rho."""
    young = stabilizer(pi)
    gamma_dims = pi.gamma.dimensions
    return (
        math.factorial(pi.n) // young.order
        * math.prod(gamma_dims[i] for i in pi.labels)
        * young.dimension(rho)
    )


@dataclass(frozen=True)
class AuditRecord:
    gamma: str
    n: int
    total: int
    expected: int

    @property
    def passed(self) -> bool:
        return self.total == self.expected

    def as_dict(self) -> dict:
        return {"gamma": self.gamma, "n": self.n, "total": self.total,
                "expected": self.expected, "passed": self.passed}


def dimension_audit(gamma: CharacterTable, n: int, tol: float = MULTIPLICITY_TOL) -> AuditRecord:
    """Compare sum of a_rho * dim R_{pi,rho} with dim L(G_n/K_n) = |Gamma|^(n-1)."""
    total = sum(
        a * induced_dimension(pi, rho)
        for pi, coeffs in all_decompositions(gamma, n, tol)
        for rho, a in coeffs.items()
    )
    return AuditRecord(gamma.name, n, total, gamma.order ** (n - 1))


def multiplicity_square_sum(gamma: CharacterTable, n: int, tol: float = MULTIPLICITY_TOL) -> int:
    """sum of a^2 over all irreps of G_n: the number of K_n double cosets."""
    return sum(a * a for _, coeffs in all_decompositions(gamma, n, tol) for a in coeffs.values())
