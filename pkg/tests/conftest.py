import pytest
from hypothesis import settings

from pointfree.frame import Frame
from pointfree.mt import fixture
from pointfree.space import FinSpace

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def m2():
    return fixture("2")


@pytest.fixture
def m4():
    return fixture("M4")


@pytest.fixture
def sier_mt():
    return fixture("SIER")


@pytest.fixture
def c3():
    return Frame.of_sets([0, 0b01, 0b11])


@pytest.fixture
def d4():
    return Frame.of_sets([0, 0b01, 0b10, 0b11])


@pytest.fixture
def two_frame():
    return Frame.of_sets([0, 1])


@pytest.fixture
def sier():
    # point 1 is open
    return FinSpace(2, frozenset({0, 0b10, 0b11}))


@pytest.fixture
def indiscrete():
    return FinSpace(2, frozenset({0, 0b11}))


@pytest.fixture
def point():
    return FinSpace(1, frozenset({0, 1}))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
