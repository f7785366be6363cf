import pytest

from loopkit.enumerate import builtin, catalog

ACCEPTANCE_LINES = []


def record(criterion, ok, detail=""):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def small_loops():
    """One representative per isomorphism class, orders 1..5."""
    return [L for n in range(1, 6) for L in catalog(n)]


@pytest.fixture(scope="session")
def loops_to_6():
    return [L for n in range(1, 7) for L in catalog(n)]


@pytest.fixture(scope="session")
def c_loops_to_8():
    return [L for n in range(1, 9) for L in catalog(n, ["c"])]


@pytest.fixture(scope="session")
def lc_loops_to_8():
    return [L for n in range(1, 9) for L in catalog(n, ["lc"])]


@pytest.fixture(scope="session")
def rc_loops_to_8():
    return [L for n in range(1, 9) for L in catalog(n, ["rc"])]


@pytest.fixture
def z2():
    return builtin("cyclic:2")


@pytest.fixture
def z3():
    return builtin("cyclic:3")


@pytest.fixture
def z4():
    return builtin("cyclic:4")


@pytest.fixture
def klein():
    return builtin("klein")


@pytest.fixture
def sym3():
    return builtin("sym3")


@pytest.fixture
def steiner8():
    return builtin("steiner8")


@pytest.fixture
def steiner10():
    return builtin("steiner10")
