import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hesstop.polyalg import HomoPoly


@pytest.fixture
def rng():
    return random.Random(0x5EED)


small_fractions = st.fractions(
    min_value=Fraction(-9), max_value=Fraction(9), max_denominator=4
)


@st.composite
def homopolys(draw, min_degree=0, max_degree=8, nonzero=True):
    degree = draw(st.integers(min_value=min_degree, max_value=max_degree))
    coeffs = draw(
        st.lists(small_fractions, min_size=degree + 1, max_size=degree + 1)
    )
    if nonzero and all(c == 0 for c in coeffs):
        idx = draw(st.integers(min_value=0, max_value=degree))
        coeffs[idx] = Fraction(1)
    return HomoPoly(degree, tuple(coeffs))
