import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from conconic import HPoint, Triangle


@pytest.fixture
def rnd():
    return random.Random(0xC0FFEE)


# hypothesis strategies shared across test modules

small_fractions = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=6
)

nonzero_fractions = small_fractions.filter(lambda f: f != 0)

unit_interval_fractions = st.fractions(
    min_value=Fraction(1, 24), max_value=Fraction(23, 24), max_denominator=24
)


@st.composite
def exact_points(draw):
    coords = [draw(small_fractions) for _ in range(3)]
    if all(c == 0 for c in coords):
        coords[2] = Fraction(1)
    return HPoint(*coords)


@st.composite
def exact_affine_points(draw):
    return HPoint(draw(small_fractions), draw(small_fractions), 1)


@st.composite
def exact_triangles(draw):
    from hypothesis import assume

    from conconic.linalg import det3

    pts = [draw(exact_affine_points()) for _ in range(3)]
    assume(det3(tuple(p.coords for p in pts)) != 0)
    return Triangle(*pts)
