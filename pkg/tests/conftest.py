import pytest
from hypothesis import settings

from oreq.rings import RingSpec

settings.register_profile("oreq", max_examples=60, deadline=None)
settings.load_profile("oreq")

REGISTRY = ("QP:5,3,2", "TRUNCQ:4", "NILQ:5,4,2")


def ring(text):
    return RingSpec.parse(text).build()


@pytest.fixture
def qp():
    return ring("QP:5,3,2")


@pytest.fixture
def qp_valid():
    return ring("QP:5,4,2")


@pytest.fixture
def truncq3():
    return ring("TRUNCQ:3")


@pytest.fixture
def nilq():
    return ring("NILQ:5,4,2")


# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
