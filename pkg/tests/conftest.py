import pytest

from permq import PatternSet, census, enumerate_partition

STANDARD = PatternSet.of("1234", "3412")

_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str):
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def standard():
    return STANDARD


@pytest.fixture(scope="session")
def partitions():
    """Lazily built {1234, 3412} partitions shared across the session."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_partition(n, STANDARD)
        return cache[n]

    return get


@pytest.fixture(scope="session")
def censuses(partitions):
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = census(partitions(n))
        return cache[n]

    return get
