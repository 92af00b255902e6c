from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ke_polytope.casedb import builtin_cases
from ke_polytope.qfield import QuadNum

small_rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
quadnums = st.builds(QuadNum, small_rationals, small_rationals)
nonzero_quadnums = quadnums.filter(bool)


def q(r=0, s=0) -> QuadNum:
    """Shorthand: q('5/4', '1/2') is 5/4 + (1/2)*sqrt3."""
    return QuadNum(Fraction(r), Fraction(s))


@pytest.fixture(scope="session")
def cases():
    return {c.id: c for c in builtin_cases()}
