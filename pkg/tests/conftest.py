import pytest

# one line per acceptance criterion, echoed after the run so the
# verdicts are visible even when every test passes
_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def scoreboard():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
