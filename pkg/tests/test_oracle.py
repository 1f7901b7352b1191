import itertools
import math

import numpy as np
import pytest

from wreathgelfand.chartable import cyclic_table, symmetric_table
from wreathgelfand.crack import is_gelfand, multiplicity_square_sum
from wreathgelfand.oracle import (
    build_wreath,
    convolution_commutes,
    cyclic_group,
    double_cosets,
    factor_permutation_operator,
    permutations_group,
    representation_matrix,
    wreath_char_check,
)

CASES = [("cyclic", 2), ("cyclic", 3), ("symmetric", 3)]


@pytest.mark.parametrize("kind,size", CASES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_oracle_matches_character_side(kind, size, n):
    G, K = build_wreath(kind, size, n)
    table = symmetric_table(size) if kind == "symmetric" else cyclic_table(size)
    assert G.check_associative()
    assert len(K) == table.order * math.factorial(n)
    assert G.order == table.order**n * math.factorial(n)
    res = convolution_commutes(G, K)
    assert res.commutes == is_gelfand(table, n).is_gelfand
    assert res.double_cosets == multiplicity_square_sum(table, n)


def test_trivial_subgroup_breaks_commutativity():
    G = permutations_group(3)
    res = convolution_commutes(G, [G.identity])
    assert not res.commutes and res.counterexample is not None
    assert convolution_commutes(cyclic_group(5), [0]).commutes


def test_double_cosets_partition_group():
    G, K = build_wreath("symmetric", 3, 2)
    blocks = double_cosets(G, K)
    assert sorted(x for b in blocks for x in b) == list(range(G.order))


def test_size_caps():
    with pytest.raises(ValueError):
        build_wreath("symmetric", 4, 2)
    with pytest.raises(ValueError):
        build_wreath("cyclic", 2, 4)


@pytest.mark.parametrize("reps", [
    ["perm"], ["perm", "perm"], ["perm", "perm", "perm"], ["perm", "perm", "sign"],
    ["sign", "sign", "sign"], ["triv", "perm", "perm"],
])
def test_trace_rule(reps):
    assert wreath_char_check(reps, len(reps), trials=100, seed=0)


def test_trace_rule_is_not_vacuous():
    # naive product of traces differs from the cycle rule for a swap
    A = representation_matrix("perm", (1, 0, 2))
    P = factor_permutation_operator([3, 3], (1, 0))
    assert np.trace(np.kron(A, A) @ P) == np.trace(A @ A)
    assert np.trace(np.kron(A, A) @ P) != np.trace(A) ** 2
    for sigma in itertools.permutations(range(3)):
        P = factor_permutation_operator([3, 3, 3], sigma)
        assert (P @ P.T == np.eye(27, dtype=int)).all()
