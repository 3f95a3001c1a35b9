import pytest

from apnquad import make_field

# filled by tests/test_acceptance.py, printed after the run so the
# per-criterion verdict lines survive output capture
CRITERIA: dict = {}


def record_criterion(num: int, passed: bool, note: str = "") -> None:
    CRITERIA[num] = (passed, note)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        passed, note = CRITERIA[num]
        tail = f"  ({note})" if note else ""
        terminalreporter.write_line(f"criterion {num}: {'PASS' if passed else 'FAIL'}{tail}")


@pytest.fixture(scope="session")
def ctx3():
    return make_field(3)


@pytest.fixture(scope="session")
def ctx4():
    return make_field(4)


@pytest.fixture(scope="session")
def ctx6():
    return make_field(6)
