"""Bounds comparing the largest S_k irrep with the number of partitions.

Group-theoretic non-Gelfand-ness at level 3 follows once
``max dim >= 2 p(k) + 2``.  For large k this is checked through a
Vershik-Kerov style lower bound on the maximal dimension and the
Hardy-Ramanujan upper bound on p(k); their ratio ``r_ratio`` exceeds 1 from
k = 12 on.  Everything here is double precision in log space.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .partitions import max_dimension, partition_count

VK_CONSTANT = math.pi / math.sqrt(6)


def log_vk_lower(k: float) -> float:
    return -VK_CONSTANT * math.sqrt(k) + math.lgamma(k + 1) / 2


def vk_lower(k: float) -> float:
    """exp(-c sqrt k) sqrt(k!) with c = pi / sqrt 6."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.exp(log_vk_lower(k))


def hr_upper(k: float) -> float:
    """exp(pi sqrt(2k/3)) / (4 k sqrt 3)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return math.exp(math.pi * math.sqrt(2 * k / 3)) / (4 * k * math.sqrt(3))


def log_r_ratio(k: float) -> float:
    """log of r(k); -inf when r(k) <= 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    growth = math.pi * math.sqrt(2 * k / 3)
    lead = math.log(2 * k * math.sqrt(3)) + log_vk_lower(k)
    sub = math.log(4 * k * math.sqrt(3))
    if lead <= sub:
        return -math.inf
    return lead + math.log1p(-math.exp(sub - lead)) - growth


def r_ratio(k: float) -> float:
    """(2k sqrt3 vk_lower(k) - 4k sqrt3) / exp(pi sqrt(2k/3)), possibly negative."""
    lr = log_r_ratio(k)
    if lr == -math.inf:
        # Small k: the difference is negative; evaluate directly (no overflow there).
        return r_ratio_direct(k)
    return math.exp(lr) if lr < 709 else math.inf


def r_ratio_direct(k: int) -> float:
    """Straight evaluation of r(k) with an exact factorial; overflows past k ~ 170."""
    k = int(k)
    root3 = math.sqrt(3)
    vk = math.exp(-VK_CONSTANT * math.sqrt(k)) * math.sqrt(math.factorial(k))
    return (2 * k * root3 * vk - 4 * k * root3) / math.exp(math.pi * math.sqrt(2 * k / 3))


@dataclass(frozen=True)
class BoundRow:
    k: int
    dim_max: int
    threshold: int
    vk_lower: float
    hr_upper: float
    r: float
    eq4_holds: bool

    def as_dict(self) -> dict:
        return asdict(self)


def inequality_check(k: int) -> BoundRow:
    """Largest irrep dimension of S_k against 2 p(k) + 2."""
    if not 1 <= k <= 60:
        raise ValueError("inequality_check needs 1 <= k <= 60")
    _, dim = max_dimension(k)
    threshold = 2 * partition_count(k) + 2
    return BoundRow(k, dim, threshold, vk_lower(k), hr_upper(k), r_ratio(k), dim >= threshold)


def bound_table(k_from: int, k_to: int) -> list[BoundRow]:
    if not 1 <= k_from <= k_to <= 60:
        raise ValueError("bound_table needs 1 <= k_from <= k_to <= 60")
    return [inequality_check(k) for k in range(k_from, k_to + 1)]


def first_crossover(k_max: int = 300) -> int | None:
    """Smallest integer k with r(k) >= 1."""
    for k in range(1, k_max + 1):
        if log_r_ratio(k) >= 0:
            return k
    return None
