"""Brute-force ground truth on explicit small groups.

Nothing here touches character tables.  Groups are multiplication tables
on element indices; the Gelfand property is checked directly as
commutativity of the convolution algebra of K-biinvariant functions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

MAX_GROUP_ORDER = 20_000
MAX_DOUBLE_COSETS = 64


@dataclass(eq=False)
class ExplicitGroup:
    """Finite group as a Cayley table on indices 0..|G|-1."""

    elements: list
    table: np.ndarray  # table[a, b] = index of a*b
    name: str = "G"

    def __post_init__(self):
        n = len(self.elements)
        ident = [e for e in range(n) if np.array_equal(self.table[e], np.arange(n))]
        if len(ident) != 1:
            raise ValueError("no unique identity element")
        self.identity = ident[0]
        inv = np.argmax(self.table == self.identity, axis=1)
        if not np.all(self.table[np.arange(n), inv] == self.identity):
            raise ValueError("some element has no inverse")
        self.inverse = inv

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def check_associative(self, trials: int = 200, seed: int = 0) -> bool:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, self.order, size=(3, trials))
        t = self.table
        return bool(np.all(t[t[a, b], c] == t[a, t[b, c]]))


def permutations_group(k: int) -> ExplicitGroup:
    """S_k acting on {0..k-1}; (p*q)(i) = p(q(i)), lexicographic element order."""
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    table = np.array(
        [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms], dtype=np.int64
    )
    return ExplicitGroup(perms, table, f"S{k}")


def cyclic_group(m: int) -> ExplicitGroup:
    r = np.arange(m)
    return ExplicitGroup(list(range(m)), (r[:, None] + r[None, :]) % m, f"C{m}")


def build_wreath(gamma_kind: str, size: int, n: int) -> tuple[ExplicitGroup, np.ndarray]:
    """G = Gamma^n x| S_n with K = {(g,...,g; s)}.

    ``gamma_kind`` is "symmetric" (size = k <= 3) or "cyclic" (size = m <= 4).
    Elements are (gamma tuple, permutation) in lexicographic order, and
    (a, s)(b, t) = (a * s(b), st) with s(b)_i = b_{s^-1(i)}.
    """
    if gamma_kind == "symmetric":
        if size > 3:
            raise ValueError("oracle supports symmetric Gamma of degree <= 3")
        base = permutations_group(size)
    elif gamma_kind == "cyclic":
        if size > 4:
            raise ValueError("oracle supports cyclic Gamma of order <= 4")
        base = cyclic_group(size)
    else:
        raise ValueError(f"unknown group kind {gamma_kind!r}")
    if n > 3:
        raise ValueError("oracle supports n <= 3")
    g = base.order
    order = g**n * math.factorial(n)
    if order > MAX_GROUP_ORDER:
        raise ValueError(f"|G| = {order} exceeds {MAX_GROUP_ORDER}")

    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    tuples = np.array(list(itertools.product(range(g), repeat=n)), dtype=np.int64).reshape(-1, n)
    nt, npm = len(tuples), len(perms)
    A = np.repeat(tuples, npm, axis=0)  # element index = tuple_index * n! + perm_index
    S = np.tile(perms, (nt, 1))
    S_inv = np.argsort(S, axis=1)
    N = nt * npm
    radix = g ** np.arange(n - 1, -1, -1)
    enc = n ** np.arange(n - 1, -1, -1)
    lut = np.full(n**n, -1, dtype=np.int64)
    lut[perms @ enc] = np.arange(npm)
    table = np.empty((N, N), dtype=np.int64)
    for x in range(N):
        shifted = A[:, S_inv[x]]  # s(b) for every b
        gamma_part = base.table[A[x][None, :], shifted]
        comp = S[x][S]  # (st)(i) = s(t(i))
        table[x] = (gamma_part @ radix) * npm + lut[comp @ enc]

    elements = [(tuple(int(x) for x in a), tuple(int(x) for x in s)) for a, s in zip(A, S)]
    group = ExplicitGroup(elements, table, f"{base.name} wr S{n}")
    diag = [i for i, (a, _) in enumerate(elements) if len(set(a)) == 1]
    return group, np.array(diag, dtype=np.int64)


def double_cosets(group: ExplicitGroup, K: Sequence[int]) -> list[list[int]]:
    """Partition of G into double cosets K x K, in order of first element."""
    K = np.asarray(K, dtype=np.int64)
    label = np.full(group.order, -1, dtype=np.int64)
    blocks = []
    for x in range(group.order):
        if label[x] >= 0:
            continue
        left = group.table[K, x]
        members = np.unique(group.table[left[:, None], K[None, :]])
        label[members] = len(blocks)
        blocks.append(members.tolist())
    return blocks


@dataclass(frozen=True)
class ConvolutionResult:
    commutes: bool
    double_cosets: int
    counterexample: Optional[tuple[int, int, int]] = None  # (i, j, x)


def convolution_commutes(group: ExplicitGroup, K: Sequence[int]) -> ConvolutionResult:
    """Check f_i * f_j == f_j * f_i for all double-coset indicators.

    (f * g)(x) = (1/|G|) sum_y f(x y^-1) g(y); the 1/|G| is dropped so the
    comparison is in exact integers.
    """
    blocks = double_cosets(group, K)
    D = len(blocks)
    if D > MAX_DOUBLE_COSETS:
        raise ValueError(f"{D} double cosets exceed the cap of {MAX_DOUBLE_COSETS}")
    label = np.empty(group.order, dtype=np.int64)
    for b, members in enumerate(blocks):
        label[members] = b
    # conv[x, i, j] = #{y in block j : x y^-1 in block i}
    conv = np.zeros((group.order, D, D), dtype=np.int64)
    xs = np.arange(group.order)
    for j, members in enumerate(blocks):
        inv = group.inverse[np.asarray(members)]
        lab = label[group.table[xs[:, None], inv[None, :]]]
        for i in range(D):
            conv[:, i, j] = np.count_nonzero(lab == i, axis=1)
    diff = conv != conv.transpose(0, 2, 1)
    if diff.any():
        x, i, j = (int(v) for v in np.argwhere(diff)[0])
        return ConvolutionResult(False, D, (i, j, x))
    return ConvolutionResult(True, D)


# -- trace identity for the factor-permuting operator -----------------------


def _perm_matrix(p: Sequence[int]) -> np.ndarray:
    m = np.zeros((len(p), len(p)), dtype=np.int64)
    m[list(p), range(len(p))] = 1
    return m


def representation_matrix(kind: str, perm: Sequence[int]) -> np.ndarray:
    """Integer matrix of an S_3 element in a small representation."""
    if kind == "perm":
        return _perm_matrix(perm)
    if kind == "sign":
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        return np.array([[(-1) ** inversions]], dtype=np.int64)
    if kind == "triv":
        return np.array([[1]], dtype=np.int64)
    raise ValueError(f"unknown representation {kind!r}")


def factor_permutation_operator(dims: Sequence[int], sigma: Sequence[int]) -> np.ndarray:
    """P with P(v_1 (x) ... (x) v_n) = v_{s^-1(1)} (x) ... (x) v_{s^-1(n)}."""
    n = len(dims)
    total = math.prod(dims)
    inv = np.argsort(sigma)
    P = np.zeros((total, total), dtype=np.int64)
    for src in itertools.product(*(range(d) for d in dims)):
        dst = tuple(src[inv[i]] for i in range(n))
        P[np.ravel_multi_index(dst, dims), np.ravel_multi_index(src, dims)] = 1
    return P


def wreath_char_check(
    reps: Sequence[str], n: int, trials: int, seed: int = 0
) -> bool:
    """Verify trace((A_1 (x) ... (x) A_n) P_sigma) = prod over cycles of trace(A^len).

    ``reps`` names one representation of S_3 per tensor factor ("perm",
    "sign", "triv"); delta runs over random elements of the diagonal, sigma
    over every permutation preserving the factor labels.
    """
    if len(reps) != n or n > 3:
        raise ValueError("need one representation per factor and n <= 3")
    rng = np.random.default_rng(seed)
    s3 = list(itertools.permutations(range(3)))
    sigmas = [
        s for s in itertools.permutations(range(n)) if all(reps[s[i]] == reps[i] for i in range(n))
    ]
    for _ in range(trials):
        delta = s3[int(rng.integers(len(s3)))]
        mats = [representation_matrix(r, delta) for r in reps]
        tensor = mats[0]
        for m in mats[1:]:
            tensor = np.kron(tensor, m)
        for sigma in sigmas:
            P = factor_permutation_operator([m.shape[0] for m in mats], sigma)
            lhs = int(np.trace(tensor @ P))
            rhs = 1
            for cycle in _cycles(sigma):
                A = mats[cycle[0]]
                rhs *= int(np.trace(np.linalg.matrix_power(A, len(cycle))))
            if lhs != rhs:
                return False
    return True


def _cycles(sigma: Sequence[int]) -> list[list[int]]:
    seen, out = set(), []
    for start in range(len(sigma)):
        if start in seen:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = sigma[i]
        out.append(cyc)
    return out
