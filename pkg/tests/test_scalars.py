import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conconic.scalars import (
    all_exact,
    canonical_tuple,
    div,
    exact_sqrt,
    format_scalar,
    is_exact,
    near_zero,
    parse_scalar,
)

from conftest import small_fractions


def test_exactness_classification():
    assert is_exact(3) and is_exact(Fraction(1, 3))
    assert not is_exact(0.5)
    assert all_exact([1, Fraction(2, 5)])
    assert not all_exact([1, 0.5])


def test_div_keeps_exact_values_exact():
    assert div(1, 3) == Fraction(1, 3)
    assert isinstance(div(1, 3), Fraction)
    assert div(1.0, 3) == pytest.approx(1 / 3)
    assert isinstance(div(1.0, 3), float)


def test_exact_sqrt_perfect_squares():
    assert exact_sqrt(49) == 7
    assert exact_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert exact_sqrt(0) == 0
    assert exact_sqrt(2) is None
    assert exact_sqrt(Fraction(2, 9)) is None
    assert exact_sqrt(-4) is None


def test_near_zero_is_relative():
    assert near_zero(1e-12, 1.0, 1e-9)
    assert not near_zero(1e-12, 1e-6, 1e-9)
    assert near_zero(1e-3, 1e7, 1e-9)
    # tiny scales fall back to an absolute floor instead of dividing by zero
    assert near_zero(0.0, 0.0, 1e-9)


def test_parse_and_format_round_trip():
    for text in ["3/4", "-7/2", "5", "0.25", "-1.5"]:
        value = parse_scalar(text, exact=True)
        assert parse_scalar(format_scalar(value), exact=True) == value
    assert parse_scalar("1/3", exact=False) == pytest.approx(1 / 3)


@given(st.lists(small_fractions, min_size=3, max_size=3))
def test_canonical_tuple_idempotent(vals):
    if all(v == 0 for v in vals):
        vals[0] = Fraction(1)
    once = canonical_tuple(vals)
    assert canonical_tuple(once) == once


@given(st.lists(small_fractions, min_size=3, max_size=3), small_fractions)
def test_canonical_tuple_scale_invariant(vals, scale):
    if all(v == 0 for v in vals):
        vals[0] = Fraction(1)
    if scale == 0:
        scale = Fraction(2)
    assert canonical_tuple([scale * v for v in vals]) == canonical_tuple(vals)


@given(st.lists(small_fractions, min_size=3, max_size=3))
def test_canonical_tuple_exact_form(vals):
    if all(v == 0 for v in vals):
        vals[0] = Fraction(1)
    out = canonical_tuple(vals)
    assert all(isinstance(v, int) for v in out)
    assert math.gcd(*(abs(v) for v in out)) == 1
    first = next(v for v in out if v != 0)
    assert first > 0


def test_canonical_tuple_float_pins_largest_component():
    out = canonical_tuple([0.5, -2.0, 1.0])
    assert out == (-0.25, 1.0, -0.5)
    assert canonical_tuple([out[0] * 7.0, out[1] * 7.0, out[2] * 7.0]) == out


def test_canonical_tuple_rejects_zero():
    with pytest.raises(ValueError):
        canonical_tuple([0, 0, 0])
