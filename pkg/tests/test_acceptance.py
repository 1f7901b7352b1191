"""Acceptance criteria, one check per criterion.

Run with pytest, or directly (``python3 tests/test_acceptance.py``) for a
plain pass/fail listing.  Each check returns (passed, detail).
"""

import io
import json
import math
import time

import pytest

from wreathgelfand import oracle
from wreathgelfand.asymptotics import bound_table, log_r_ratio, r_ratio, r_ratio_direct
from wreathgelfand.chartable import (
    cyclic_table,
    dihedral_table,
    load_table,
    symmetric_table,
    to_integer,
    validate,
)
from wreathgelfand.cli import DATA_DIR, main
from wreathgelfand.crack import dimension_audit, is_gelfand, multiplicity_square_sum
from wreathgelfand.partitions import class_size, enumerate_partitions, hook_dimension
from wreathgelfand.wreath import (
    PiMultiset,
    decompose_m_pi,
    enumerate_pi,
    m_pi_identity,
    stabilizer,
)

RESULTS: dict[str, tuple[bool, str]] = {}


def cli(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def crack_point(group, n_max):
    start = time.perf_counter()
    code, out = cli("crack", group, "--n-max", str(n_max), "--json")
    d = json.loads(out)
    return code, d["cracking_point"], time.perf_counter() - start


def check_1():
    expected = [("symmetric:3", 7, 6), ("symmetric:4", 5, 4), ("symmetric:5", 4, 3),
                ("symmetric:6", 3, 3), ("symmetric:7", 3, 3)]
    ok, parts = True, []
    for group, n_max, want in expected:
        code, got, secs = crack_point(group, n_max)
        ok &= code == 0 and got == want and secs <= 60
        parts.append(f"{group} N={got} ({secs:.2f}s)")
    return ok, "; ".join(parts)


def check_2():
    code, out = cli("mpi", "symmetric:5", "-n", "3", "--labels", "3.1.1,3.1.1,3.2", "--json")
    d = json.loads(out)
    values = tuple(v["value"] for v in d["values"])
    coeffs = {x["rho"]: x["coeff"] for x in d["decomposition"]}
    s5 = symmetric_table(5)
    mn = s5.irreps[s5.irrep_index("3.2")].values[s5.class_index("4.1")]
    ok = code == 0 and values == (2, 2) and coeffs == {"1|2": 2, "1|1.1": 0} and mn == -1
    return ok, f"M_pi={values} triv={coeffs.get('1|2')} sign={coeffs.get('1|1.1')} chi_32(4.1)={mn}"


def check_3():
    cases = [(6, ["3.2.1"], ["4.1.1", "3.1.1.1"], 4),
             (7, ["4.2.1", "3.2.1.1"], ["3.3.1", "3.2.2"], 5)]
    ok, parts = True, []
    for k, big, small, want in cases:
        t = symmetric_table(k)
        vals = {int(m_pi_identity(PiMultiset(t, [t.irrep_index(x) for x in (a, a, b)])))
                for a in big for b in small}
        dims = (t.dimensions[t.irrep_index(big[0])], t.dimensions[t.irrep_index(small[0])])
        ok &= vals == {want}
        parts.append(f"S{k} dims {dims} M(e) in {sorted(vals)}")
    return ok, "; ".join(parts)


def check_4():
    code, out = cli("bound", "--from", "8", "--to", "11", "--json")
    rows = [(r["dim_max"], r["threshold"]) for r in json.loads(out)]
    want = [(90, 46), (216, 62), (768, 86), (2310, 114)]
    return code == 0 and rows == want, f"{rows}"


def check_5():
    r12 = r_ratio(12)
    logs = [log_r_ratio(k) for k in range(12, 301)]
    increasing = all(b > a for a, b in zip(logs, logs[1:]))
    worst = max(abs(r_ratio(k) - r_ratio_direct(k)) / max(abs(r_ratio_direct(k)), 1e-300)
                for k in range(1, 21))
    ok = r12 >= 1 and increasing and worst <= 1e-8
    return ok, f"r(12)={r12:.5f} increasing on [12,300]={increasing} max rel diff={worst:.1e}"


def check_6():
    start = time.perf_counter()
    ok, parts = True, []
    for kind, size, table in [("cyclic", 2, cyclic_table(2)), ("cyclic", 3, cyclic_table(3)),
                              ("symmetric", 3, symmetric_table(3))]:
        for n in (1, 2, 3):
            G, K = oracle.build_wreath(kind, size, n)
            res = oracle.convolution_commutes(G, K)
            squares = multiplicity_square_sum(table, n)
            agree = res.commutes == is_gelfand(table, n).is_gelfand and res.double_cosets == squares
            ok &= agree
            parts.append(f"{table.name}/n={n}:{res.double_cosets}{'' if agree else '!'}")
    secs = time.perf_counter() - start
    return ok and secs <= 120, f"{' '.join(parts)} ({secs:.2f}s)"


def check_7():
    expected = [("dihedral:5", 7, 6, 10), ("dihedral:7", 7, 6, 14), ("file:gl23.json", 4, 3, 48),
                ("cyclic:4", 4, None, 4)]
    ok, parts = True, []
    for group, n_max, want, order in expected:
        code, got, _ = crack_point(group, n_max)
        ok &= code == 0 and got == want
        if want is not None:
            ok &= 3 <= got <= order
        parts.append(f"{group} N={got}")
    return ok, "; ".join(parts)


def check_8():
    failures = []
    for k in range(1, 13):
        rep = validate(symmetric_table(k))
        if not (rep.passed and rep.row_residual == 0 and rep.column_residual == 0):
            failures.append(f"orthogonality S{k}")
    for k in range(1, 21):
        parts = enumerate_partitions(k)
        if sum(class_size(t) for t in parts) != math.factorial(k):
            failures.append(f"class sizes S{k}")
        if sum(hook_dimension(p) ** 2 for p in parts) != math.factorial(k):
            failures.append(f"dimensions S{k}")
    # every pi the crack runs of criteria 1 and 7 can reach
    gl23 = load_table((DATA_DIR / "gl23.json").read_text())
    levels = [(symmetric_table(3), 6), (symmetric_table(4), 4), (symmetric_table(5), 3),
              (symmetric_table(6), 3), (symmetric_table(7), 3), (dihedral_table(5), 6),
              (dihedral_table(7), 6), (gl23, 3), (cyclic_table(4), 4)]
    checked = 0
    for t, n_top in levels:
        for n in range(1, n_top + 1):
            for pi in enumerate_pi(t, n):
                coeffs = decompose_m_pi(pi)  # raises on non-integral or inconsistent sums
                young = stabilizer(pi)
                if any(a < 0 for a in coeffs.values()):
                    failures.append(f"negative coefficient {pi!r}")
                identity = to_integer(m_pi_identity(pi))
                if sum(a * young.dimension(r) for r, a in coeffs.items()) != identity:
                    failures.append(f"dimension sum {pi!r}")
                checked += 1
    for t in (symmetric_table(3), cyclic_table(2), cyclic_table(3)):
        for n in (1, 2, 3):
            if not dimension_audit(t, n).passed:
                failures.append(f"audit {t.name} n={n}")
    for reps in (["perm"] * 3, ["perm", "perm", "sign"], ["sign", "perm", "triv"]):
        if not oracle.wreath_char_check(reps, 3, trials=100, seed=0):
            failures.append(f"trace rule {reps}")
    return not failures, f"{checked} decompositions checked; failures: {failures or 'none'}"


CRITERIA = {
    "1 symmetric cracking points": check_1,
    "2 S5 worked example": check_2,
    "3 S6/S7 identity values": check_3,
    "4 bound table rows": check_4,
    "5 asymptotic crossover": check_5,
    "6 oracle equivalence": check_6,
    "7 dihedral, GL(2,3), abelian": check_7,
    "8 property suites": check_8,
}


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name):
    ok, detail = CRITERIA[name]()
    RESULTS[name] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
    assert ok, detail


if __name__ == "__main__":
    status = 0
    for name, check in CRITERIA.items():
        ok, detail = check()
        status |= not ok
        print(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
    raise SystemExit(status)
