import pytest

from wreathgelfand.chartable import cyclic_table, dihedral_table, load_table, symmetric_table
from wreathgelfand.cli import DATA_DIR


@pytest.fixture(scope="session")
def s3():
    return symmetric_table(3)


@pytest.fixture(scope="session")
def s5():
    return symmetric_table(5)


@pytest.fixture(scope="session")
def gl23():
    return load_table((DATA_DIR / "gl23.json").read_text())


@pytest.fixture(scope="session")
def small_tables():
    return [symmetric_table(3), cyclic_table(2), cyclic_table(3), dihedral_table(4), dihedral_table(5)]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, (ok, detail) in RESULTS.items():
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {name}: {detail}")
