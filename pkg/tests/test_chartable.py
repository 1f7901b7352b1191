import json
from fractions import Fraction

import pytest

from wreathgelfand.chartable import (
    NumericalIntegralityError,
    TableParseError,
    TableValidationError,
    cyclic_table,
    dihedral_table,
    inner_product,
    load_table,
    mn_character,
    render_table,
    symmetric_table,
    table_from_dict,
    table_to_dict,
    tables_close,
    to_integer,
    validate,
)
from wreathgelfand.cli import DATA_DIR
from wreathgelfand.partitions import conjugate, enumerate_partitions, sign


def test_s5_row_of_six_dim_irrep(s5):
    row = s5.character(s5.irrep_index("3.1.1"))
    assert [s5.classes[c].label for c in range(7)] == [
        "1.1.1.1.1", "2.1.1.1", "2.2.1", "3.1.1", "3.2", "4.1", "5"]
    assert list(row) == [6, 0, -2, 0, 0, 0, 1]


def test_mn_four_cycle_value():
    assert mn_character((3, 2), (4, 1)) == -1


def test_conjugate_rows_differ_by_sign():
    for k in range(1, 9):
        for lam in enumerate_partitions(k):
            for mu in enumerate_partitions(k):
                assert mn_character(conjugate(lam), mu) == sign(mu) * mn_character(lam, mu)


@pytest.mark.parametrize("k", range(1, 13))
def test_exact_symmetric_tables_validate(k):
    report = validate(symmetric_table(k))
    assert report.passed, report.failures
    assert report.row_residual == 0 and report.column_residual == 0


def test_column_orthogonality_k10():
    t = symmetric_table(10)
    order = t.order
    for a in range(t.num_classes):
        for b in range(t.num_classes):
            s = sum(r.values[a] * r.values[b] for r in t.irreps)
            assert s == (order // t.sizes[a] if a == b else 0)


@pytest.mark.parametrize("m", [1, 2, 3, 5, 8, 12])
def test_cyclic_tables(m):
    report = validate(cyclic_table(m))
    assert report.passed and report.row_residual < 1e-9


@pytest.mark.parametrize("m", [3, 4, 5, 6, 7, 10])
def test_dihedral_tables(m):
    t = dihedral_table(m)
    assert t.order == 2 * m
    assert validate(t).passed


def test_bundled_files(gl23):
    c2 = load_table((DATA_DIR / "c2.json").read_text())
    assert tables_close(c2, cyclic_table(2))
    assert gl23.order == 48 and gl23.num_classes == 8
    assert sorted(gl23.dimensions) == [1, 1, 2, 2, 2, 3, 3, 4]


def test_round_trip(small_tables, s5, gl23):
    for t in [*small_tables, s5, gl23]:
        back = load_table(render_table(t))
        assert tables_close(t, back)
        assert render_table(back) == render_table(t)


def test_corrupted_value_is_located():
    doc = table_to_dict(symmetric_table(4))
    doc["irreps"][2]["values"][3] += 1
    report = validate(table_from_dict(doc))
    assert not report.passed
    assert any(doc["irreps"][2]["label"] in f for f in report.failures)
    with pytest.raises(TableValidationError):
        load_table(json.dumps(doc))


def test_bad_power_map_is_caught():
    doc = table_to_dict(dihedral_table(5))
    key = next(iter(doc["power_maps"]))
    doc["power_maps"][key] = [0] * len(doc["power_maps"][key])
    assert not validate(table_from_dict(doc)).passed


def test_parse_errors():
    with pytest.raises(TableParseError):
        load_table("{not json")
    with pytest.raises(TableParseError):
        load_table("[]")


def test_inner_product_and_rounding(s5):
    v = s5.character(s5.irrep_index("3.1.1"))
    assert inner_product(v, v, s5) == Fraction(1)
    assert to_integer(2.0000001) == 2
    with pytest.raises(NumericalIntegralityError):
        to_integer(2.4)
