"""Integer partitions and cycle types.

A partition is a weakly decreasing tuple of positive ints.  The same tuple
labels an irreducible representation of S_k and a conjugacy class (cycle
type) of S_k.  Enumeration order is reverse lexicographic, so ``(k,)``
comes first and ``(1,)*k`` last.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import Iterator

Partition = tuple[int, ...]
CycleType = tuple[int, ...]

MAX_ENUM_WEIGHT = 60
MAX_COUNT_WEIGHT = 10_000
MAX_INVOLUTION_DEGREE = 40


class SizeLimitError(ValueError):
    """Raised when a request exceeds a configured combinatorial cap."""


def as_partition(parts) -> Partition:
    """Normalise ``parts`` to a partition tuple, dropping zeros."""
    p = tuple(sorted((int(x) for x in parts if int(x) != 0), reverse=True))
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {parts!r}")
    return p


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(x > 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def iter_partitions(k: int) -> Iterator[Partition]:
    """Yield the partitions of ``k`` in reverse lexicographic order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_ENUM_WEIGHT:
        raise SizeLimitError(f"partition enumeration capped at k={MAX_ENUM_WEIGHT}")
    if k == 0:
        yield ()
        return
    # Iterative successor rule; avoids deep generator stacks for k near the cap.
    a = [k]
    while True:
        yield tuple(a)
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        a[-1] -= 1
        m = a[-1]
        rem = ones + 1
        while rem > m:
            a.append(m)
            rem -= m
        if rem:
            a.append(rem)


def enumerate_partitions(k: int) -> list[Partition]:
    return list(iter_partitions(k))


_P_CACHE = [1]


def partition_count(k: int) -> int:
    """Number of partitions of ``k`` via Euler's pentagonal number recurrence."""
    if k < 0:
        return 0
    if k > MAX_COUNT_WEIGHT:
        raise SizeLimitError(f"partition_count capped at k={MAX_COUNT_WEIGHT}")
    p = _P_CACHE
    for m in range(len(p), k + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign_ = 1 if j % 2 else -1
            total += sign_ * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign_ * p[m - g2]
            j += 1
        p.append(total)
    return p[k]


def centralizer_order(t: CycleType) -> int:
    """z_t = prod_l l^{e_l} e_l!  for cycle type ``t``."""
    z = 1
    for length, mult in Counter(t).items():
        z *= length**mult * math.factorial(mult)
    return z


def class_size(t: CycleType) -> int:
    """Size of the conjugacy class of S_k with cycle type ``t``."""
    return math.factorial(sum(t)) // centralizer_order(t)


def power_cycle_type(t: CycleType, m: int) -> CycleType:
    """Cycle type of sigma**m when sigma has cycle type ``t``."""
    if m < 1:
        raise ValueError("m must be positive")
    out: list[int] = []
    for length in t:
        g = math.gcd(length, m)
        out.extend([length // g] * g)
    return tuple(sorted(out, reverse=True))


def hooks(lam: Partition) -> list[int]:
    conj = conjugate(lam)
    return [
        (row - j - 1) + (conj[j] - i - 1) + 1
        for i, row in enumerate(lam)
        for j in range(row)
    ]


def hook_dimension(lam: Partition) -> int:
    """Dimension of the S_k irrep labelled by ``lam`` (hook length formula)."""
    return math.factorial(sum(lam)) // math.prod(hooks(lam))


def sign(t: CycleType) -> int:
    return -1 if (sum(t) - len(t)) % 2 else 1


def _greedy_shape(k: int, cap: int) -> Partition:
    lam: list[int] = []
    for _ in range(k):
        options = []
        for i in range(len(lam) + 1):
            cand = lam.copy()
            if i == len(lam):
                cand.append(1)
            elif (i == 0 and lam[0] < cap) or (i > 0 and lam[i - 1] > lam[i]):
                cand[i] += 1
            else:
                continue
            options.append((hook_dimension(tuple(cand)), cand))
        lam = max(options)[1]
    return tuple(lam)


_LOG = [0.0] + [math.log(h) for h in range(1, 2 * MAX_ENUM_WEIGHT + 2)]


def _top_hook_columns(mu: tuple[int, ...]) -> list[list[int]]:
    heights = [0] * mu[0]
    for row in mu:
        for c in range(row):
            heights[c] += 1
    return [
        [mu[i] - c + heights[c] - i - 1 for i in range(heights[c])]
        for c in range(mu[0])
    ]


@lru_cache(maxsize=None)
def _max_dimension_capped(k: int, cap: int) -> tuple[int, tuple[Partition, ...]]:
    # Branch and bound over rows, largest first.  With top rows mu fixed and r
    # cells left (parts <= last row), every hook of mu in column c grows by the
    # column length nu'_c of the remainder, and the remainder contributes at most
    # F(r, cap) / r!.  The hook growth is bounded below by its minimum over the
    # relaxed column profiles (w columns of height r / w), which are the vertices
    # of the feasible region of a concave objective.
    cap = min(cap, k)
    if k <= 1 or cap == 1:
        return 1, ((1,) * k,)
    best = hook_dimension(_greedy_shape(k, cap))
    log_best = math.log(best)
    labels: list[Partition] = []
    log_kfact = math.lgamma(k + 1)
    log1p = math.log1p

    def search(prefix: tuple[int, ...], used: int, row_cap: int) -> None:
        nonlocal best, log_best, labels
        rest = k - used
        if rest == 0:
            d = hook_dimension(prefix)
            if d > best:
                best, log_best, labels = d, math.log(d), [prefix]
            elif d == best:
                labels.append(prefix)
            return
        for row in range(min(row_cap, rest), 0, -1):
            nxt = prefix + (row,)
            left = rest - row
            # dim is conjugation invariant: unconstrained search keeps length <= width.
            if symmetric and len(nxt) + -(-left // row) > nxt[0]:
                continue
            if left:
                cols = _top_hook_columns(nxt)
                log_h = sum(_LOG[h] for col in cols for h in col)
                tail = math.log(_max_dimension_capped(left, row)[0])
                bound = log_kfact - math.lgamma(left + 1) - log_h + tail
                if bound < log_best - 1e-9:
                    continue
                growth = min(
                    sum(log1p(left / (w * h)) for col in cols[:w] for h in col)
                    for w in range(1, min(row, left) + 1)
                )
                if bound - growth < log_best - 1e-9:
                    continue
            search(nxt, used + row, row)

    symmetric = cap == k
    search((), 0, cap)
    if symmetric:
        labels += [conjugate(lam) for lam in labels]
    return best, tuple(sorted(set(labels), reverse=True))


def max_dimension(k: int) -> tuple[tuple[Partition, ...], int]:
    """Labels of all maximal-dimension irreps of S_k, and that dimension.

    Labels come in the fixed partition order; the first one is the
    canonical choice.
    """
    if not 1 <= k <= MAX_ENUM_WEIGHT:
        raise SizeLimitError(f"max_dimension needs 1 <= k <= {MAX_ENUM_WEIGHT}")
    dim, labels = _max_dimension_capped(k, k)
    return labels, dim


@lru_cache(maxsize=None)
def involution_count(m: int) -> int:
    """Number of involutions (including the identity) in S_m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > MAX_INVOLUTION_DEGREE:
        raise SizeLimitError(f"involution_count capped at m={MAX_INVOLUTION_DEGREE}")
    a, b = 1, 1
    for j in range(2, m + 1):
        a, b = b, b + (j - 1) * a
    return b
