from fractions import Fraction

import pytest
from hypothesis import strategies as st

from g3hyp.arith import QuadExt

# lines appended by tests/test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []

rationals = st.builds(
    Fraction,
    st.integers(min_value=-50, max_value=50),
    st.integers(min_value=1, max_value=12),
)
nonzero_rationals = rationals.filter(bool)


def quadext(radicand: int):
    return st.builds(lambda a, b: QuadExt(a, b, radicand), rationals, rationals)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
