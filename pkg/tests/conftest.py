import pytest

from orecentral.basepoly import BasePoly, OreAlgebra
from orecentral.parsing import parse_operator


@pytest.fixture
def weyl():
    return OreAlgebra.weyl()


@pytest.fixture
def qpower():
    return OreAlgebra.qpower()


@pytest.fixture
def degenerate():
    return OreAlgebra(BasePoly.constant(1), BasePoly())


@pytest.fixture
def op():
    return parse_operator


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
