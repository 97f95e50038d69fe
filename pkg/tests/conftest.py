import pytest

from regreal import load_corpus

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fig3():
    return load_corpus("fig3_cantor_dist")


@pytest.fixture(scope="session")
def fig2():
    return load_corpus("fig2_cantor_dist_recognizer")


@pytest.fixture(scope="session")
def cantor():
    return load_corpus("cantor")


@pytest.fixture(scope="session")
def identity():
    return load_corpus("identity")


@pytest.fixture(scope="session")
def hilbert():
    return load_corpus("fig4_hilbert")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
