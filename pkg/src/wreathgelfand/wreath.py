"""Irreps of Gamma^n up to permutation, their stabilizers, and M_pi.

An irrep pi = pi_{l1} (x) ... (x) pi_{ln} of Gamma^n is stored as the sorted
tuple of Gamma-irrep indices.  Its stabilizer in S_n is a Young subgroup
S_{m1} x ... x S_{mr}, one factor per distinct index.  ``m_pi`` averages the
wreath character over the diagonal copy of Gamma; the coefficients of its
decomposition over the stabilizer are the multiplicities of the induced
irreps of Gamma^n x| S_n in the permutation module on G_n / K_n.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .chartable import (
    CharacterTable,
    NumericalIntegralityError,
    Scalar,
    inner_product,
    is_real,
    mn_character,
    partition_label,
    to_integer,
)
from .partitions import (
    CycleType,
    Partition,
    SizeLimitError,
    class_size,
    enumerate_partitions,
    hook_dimension,
    involution_count,
)

MAX_PI_COUNT = 10**6
MULTIPLICITY_TOL = 1e-6


class HypothesisError(ValueError):
    """The realness hypothesis of the tensor-multiplicity shortcut fails."""


class NegativeCoefficientError(ArithmeticError):
    pass


@dataclass(frozen=True)
class YoungProduct:
    """S_{m1} x ... x S_{mr}, given by its block sizes."""

    block_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(math.factorial(m) for m in self.block_sizes)

    @cached_property
    def classes(self) -> tuple[tuple[CycleType, ...], ...]:
        # identity class first in every factor
        per_block = [tuple(reversed(enumerate_partitions(m))) for m in self.block_sizes]
        return tuple(itertools.product(*per_block))

    @cached_property
    def irreps(self) -> tuple[tuple[Partition, ...], ...]:
        # trivial irrep first in every factor
        per_block = [tuple(enumerate_partitions(m)) for m in self.block_sizes]
        return tuple(itertools.product(*per_block))

    @property
    def identity(self) -> tuple[CycleType, ...]:
        return tuple((1,) * m for m in self.block_sizes)

    def class_size(self, cls: Sequence[CycleType]) -> int:
        return math.prod(class_size(t) for t in cls)

    def character(self, rho: Sequence[Partition], cls: Sequence[CycleType]) -> int:
        return math.prod(mn_character(lam, t) for lam, t in zip(rho, cls))

    def dimension(self, rho: Sequence[Partition]) -> int:
        return math.prod(hook_dimension(lam) for lam in rho)

    def dimension_sum(self) -> int:
        """Sum of irrep dimensions (= number of involutions)."""
        return math.prod(involution_count(m) for m in self.block_sizes)

    def is_class(self, cls) -> bool:
        return len(cls) == len(self.block_sizes) and all(
            sum(t) == m and all(x > 0 for x in t) and list(t) == sorted(t, reverse=True)
            for t, m in zip(cls, self.block_sizes)
        )


@dataclass(frozen=True)
class PiMultiset:
    gamma: CharacterTable
    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(sorted(int(x) for x in self.labels))
        s = len(self.gamma.irreps)
        if not labels or labels[0] < 0 or labels[-1] >= s:
            raise ValueError(f"labels must be irrep indices in 0..{s - 1}")
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(Counter(self.labels).items()))

    def label_names(self) -> tuple[str, ...]:
        return tuple(self.gamma.irreps[i].label for i in self.labels)

    def __repr__(self) -> str:
        return f"PiMultiset({self.gamma.name}, {self.label_names()})"


@dataclass(frozen=True)
class SPiClassFunction:
    young: YoungProduct
    values: dict

    def __getitem__(self, cls):
        return self.values[tuple(cls)]


def rho_label(rho: Sequence[Partition]) -> str:
    return "|".join(partition_label(lam) for lam in rho)


def enumerate_pi(gamma: CharacterTable, n: int, cap: int = MAX_PI_COUNT) -> list[PiMultiset]:
    """One representative per S_n-orbit of irreps of Gamma^n, lexicographically."""
    if n < 1:
        raise ValueError("n must be positive")
    s = len(gamma.irreps)
    count = math.comb(s + n - 1, n)
    if count > cap:
        raise SizeLimitError(f"{count} multisets exceed the cap of {cap}")
    return [PiMultiset(gamma, c) for c in itertools.combinations_with_replacement(range(s), n)]


def stabilizer(pi: PiMultiset) -> YoungProduct:
    return YoungProduct(tuple(m for _, m in pi.blocks))


def _zero(gamma: CharacterTable):
    return 0 if gamma.exact else 0j


def _finish(total, gamma: CharacterTable) -> Scalar:
    return Fraction(total, gamma.order) if gamma.exact else total / gamma.order


def m_pi(pi: PiMultiset, cls: Sequence[CycleType]) -> Scalar:
    """M_pi at the class ``cls`` (one cycle type per stabilizer block).

    A cycle of length L inside block j contributes chi_j(delta**L), so
    M_pi(cls) = (1/|Gamma|) sum_C |C| prod_j prod_{L in t_j} chi_j(C**L).
    """
    young = stabilizer(pi)
    cls = tuple(tuple(t) for t in cls)
    if not young.is_class(cls):
        raise ValueError(f"{cls!r} is not a class of S_pi with blocks {young.block_sizes}")
    gamma = pi.gamma
    factors = [
        (gamma.irreps[irrep].values, length)
        for (irrep, _), t in zip(pi.blocks, cls)
        for length in t
    ]
    total = _zero(gamma)
    for c, klass in enumerate(gamma.classes):
        term = klass.size
        for values, length in factors:
            term *= values[gamma.power_class(c, length)]
        total += term
    return _finish(total, gamma)


def m_pi_function(pi: PiMultiset) -> SPiClassFunction:
    young = stabilizer(pi)
    return SPiClassFunction(young, {cls: m_pi(pi, cls) for cls in young.classes})


def m_pi_identity(pi: PiMultiset) -> Scalar:
    """M_pi(e) as the class sum of the product of the n characters."""
    gamma = pi.gamma
    total = _zero(gamma)
    for c, klass in enumerate(gamma.classes):
        term = klass.size
        for i in pi.labels:
            term *= gamma.irreps[i].values[c]
        total += term
    return _finish(total, gamma)


def kron_multiplicity(
    gamma: CharacterTable, sources: Sequence[int], target: int, tol: float = MULTIPLICITY_TOL
) -> int:
    """Multiplicity of irrep ``target`` in the tensor product of ``sources``."""
    if not is_real(gamma, target):
        raise HypothesisError(
            f"character {gamma.irreps[target].label!r} of {gamma.name} is not real-valued"
        )
    product = []
    for c in range(gamma.num_classes):
        v = 1 if gamma.exact else 1 + 0j
        for i in sources:
            v *= gamma.irreps[i].values[c]
        product.append(v)
    return to_integer(inner_product(product, gamma.irreps[target].values, gamma), tol)


def decompose_m_pi(pi: PiMultiset, tol: float = MULTIPLICITY_TOL) -> dict:
    """Coefficients a_rho = <M_pi, chi_rho> over the irreps of S_pi."""
    young = stabilizer(pi)
    values = m_pi_function(pi).values
    gamma = pi.gamma
    coeffs = {}
    for rho in young.irreps:
        total = sum(
            young.class_size(cls) * v * young.character(rho, cls) for cls, v in values.items()
        )
        raw = total / young.order if not gamma.exact else Fraction(total) / young.order
        if complex(raw).real < -tol:
            raise NegativeCoefficientError(f"{pi!r}: coefficient {raw} for {rho_label(rho)}")
        try:
            coeffs[rho] = to_integer(raw, tol)
        except NumericalIntegralityError as exc:
            raise NumericalIntegralityError(f"{pi!r}, rho={rho_label(rho)}: {exc}") from None
    identity = to_integer(values[young.identity], tol)
    weighted = sum(a * young.dimension(rho) for rho, a in coeffs.items())
    if weighted != identity:
        raise NumericalIntegralityError(
            f"{pi!r}: sum a_rho dim rho = {weighted} but M_pi(e) = {identity}"
        )
    return coeffs


def dimension_sum_filter(pi: PiMultiset, tol: float = MULTIPLICITY_TOL) -> bool:
    """True when M_pi(e) exceeds the dimension sum of S_pi's irreps.

    Then some coefficient is at least 2, without decomposing.
    """
    return to_integer(m_pi_identity(pi), tol) > stabilizer(pi).dimension_sum()


lemma31_filter = dimension_sum_filter
