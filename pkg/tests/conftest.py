import pytest

from twobridge import parse_slope

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def S():
    """Shorthand slope constructor: S("2/5")."""
    return parse_slope


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
