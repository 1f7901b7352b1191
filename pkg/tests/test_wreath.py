import itertools
from fractions import Fraction

import pytest

from wreathgelfand.chartable import cyclic_table, is_real, symmetric_table
from wreathgelfand.wreath import (
    HypothesisError,
    PiMultiset,
    YoungProduct,
    decompose_m_pi,
    dimension_sum_filter,
    enumerate_pi,
    kron_multiplicity,
    m_pi,
    m_pi_function,
    m_pi_identity,
    stabilizer,
)


def _pi(table, *labels):
    return PiMultiset(table, [table.irrep_index(x) for x in labels])


def test_s5_worked_example(s5):
    pi = _pi(s5, "3.1.1", "3.1.1", "3.2")
    f = m_pi_function(pi)
    assert stabilizer(pi).block_sizes == (1, 2)
    assert list(f.values.values()) == [2, 2]
    coeffs = decompose_m_pi(pi)
    assert list(coeffs.values()) == [2, 0]
    assert dimension_sum_filter(pi) is False


@pytest.mark.parametrize("k,big,small,expected", [
    (6, ["3.2.1"], ["4.1.1", "3.1.1.1"], 4),
    (7, ["4.2.1", "3.2.1.1"], ["3.3.1", "3.2.2"], 5),
])
def test_second_highest_identity_values(k, big, small, expected):
    t = symmetric_table(k)
    for a, b in itertools.product(big, small):
        assert t.dimensions[t.irrep_index(b)] < t.dimensions[t.irrep_index(a)]
        pi = _pi(t, a, a, b)
        assert m_pi_identity(pi) == expected
        assert m_pi(pi, stabilizer(pi).identity) == expected


def test_kron_matches_identity_value():
    # with the last character real, M_pi(e) is a tensor multiplicity
    for k in range(2, 7):
        t = symmetric_table(k)
        for n in (2, 3):
            for pi in enumerate_pi(t, n):
                assert kron_multiplicity(t, pi.labels[:-1], pi.labels[-1]) == m_pi_identity(pi)


def test_kron_rejects_complex_target():
    c3 = cyclic_table(3)
    assert not is_real(c3, 1)
    with pytest.raises(HypothesisError):
        kron_multiplicity(c3, [1, 1], 1)


def test_s4_std_fourth_power():
    t = symmetric_table(4)
    std = t.irrep_index("3.1")
    assert kron_multiplicity(t, [std] * 3, std) == 4
    coeffs = decompose_m_pi(PiMultiset(t, [std] * 4))
    assert coeffs[((4,),)] == 2


def test_filter_is_sound():
    for k in (5, 6):
        t = symmetric_table(k)
        for pi in enumerate_pi(t, 3):
            if dimension_sum_filter(pi):
                assert max(decompose_m_pi(pi).values()) >= 2


def test_coefficients_nonnegative_and_consistent(small_tables):
    for t in small_tables:
        for n in (1, 2, 3):
            for pi in enumerate_pi(t, n):
                coeffs = decompose_m_pi(pi)
                young = stabilizer(pi)
                assert all(isinstance(a, int) and a >= 0 for a in coeffs.values())
                e = m_pi_identity(pi)
                assert sum(a * young.dimension(r) for r, a in coeffs.items()) == round(complex(e).real)


def test_label_order_does_not_matter(s5):
    a = PiMultiset(s5, [3, 2, 3])
    b = PiMultiset(s5, [3, 3, 2])
    assert a.labels == b.labels
    assert m_pi_function(a).values == m_pi_function(b).values


def test_young_product():
    y = YoungProduct((2, 3))
    assert y.order == 12
    assert len(y.classes) == len(y.irreps) == 6
    assert y.classes[0] == y.identity
    assert sum(y.class_size(c) for c in y.classes) == 12
    assert y.dimension_sum() == 2 * 4
    assert not y.is_class(((2,), (2, 2)))


def test_exact_backend_returns_fractions(s5):
    pi = PiMultiset(s5, [0, 1])
    assert isinstance(m_pi_identity(pi), (int, Fraction))
