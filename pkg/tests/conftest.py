import pytest

from hermcode.hermitian import build_surface

_CRITERIA: list[str] = []


@pytest.fixture(scope="session")
def X2():
    return build_surface(2)


@pytest.fixture(scope="session")
def X3():
    return build_surface(3)


@pytest.fixture(scope="session")
def criteria_log():
    return _CRITERIA


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
