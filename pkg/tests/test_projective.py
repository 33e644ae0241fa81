from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conconic import (
    HLine,
    HPoint,
    LINE_AT_INFINITY,
    ProjectiveMap,
    collinearity,
    concurrency,
    incident,
    join,
    map_from_correspondence,
    meet,
    projective_gap,
)
from conconic.errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuadruple,
    DuplicateLine,
    DuplicatePoints,
    SingularMap,
)
from conconic.projective import coincident

from conftest import exact_points


def test_canonical_equality_up_to_scale():
    assert HPoint(2, 4, 6) == HPoint(1, 2, 3)
    assert HPoint(Fraction(1, 2), Fraction(1, 3), 1) == HPoint(3, 2, 6)
    assert HPoint(-1, -2, -3) == HPoint(1, 2, 3)
    assert HPoint(1.0, 2.0, 4.0) == HPoint(0.5, 1.0, 2.0)
    assert hash(HPoint(2, 4, 6)) == hash(HPoint(1, 2, 3))


def test_points_and_lines_are_distinct_types():
    assert HPoint(1, 2, 3) != HLine(1, 2, 3)


def test_zero_triple_rejected():
    with pytest.raises(ValueError):
        HPoint(0, 0, 0)


def test_affine_embedding_and_infinity():
    p = HPoint.from_xy(Fraction(3, 2), Fraction(-1, 2))
    assert p.to_xy() == (Fraction(3, 2), Fraction(-1, 2))
    d = HPoint.direction(1, 1)
    assert d.at_infinity
    assert incident(d, LINE_AT_INFINITY)
    with pytest.raises(ZeroDivisionError):
        d.to_xy()


def test_join_meet_oracle():
    # x-axis joins the origin and (1, 0); meets the y-axis at the origin
    origin = HPoint(0, 0, 1)
    x1 = HPoint(1, 0, 1)
    x_axis = join(origin, x1)
    assert x_axis == HLine(0, 1, 0)
    y_axis = HLine(1, 0, 0)
    assert meet(x_axis, y_axis) == origin


def test_join_duplicate_points_raises():
    with pytest.raises(CoincidentPoints):
        join(HPoint(1, 2, 3), HPoint(2, 4, 6))
    with pytest.raises(CoincidentLines):
        meet(HLine(1, 2, 3), HLine(-2, -4, -6))


@given(exact_points(), exact_points())
def test_join_is_incident_with_both(p, q):
    assume(p != q)
    l = join(p, q)
    assert incident(p, l)
    assert incident(q, l)


@given(exact_points(), exact_points(), exact_points())
def test_meet_of_joins_recovers_shared_point(p, q, r):
    assume(p != q and p != r and q != r)
    l1 = join(p, q)
    l2 = join(p, r)
    assume(l1 != l2)
    assert meet(l1, l2) == p


def test_concurrency_verdict_and_duplicates():
    l1, l2, l3 = HLine(1, 0, 0), HLine(0, 1, 0), HLine(1, 1, 0)
    verdict = concurrency(l1, l2, l3)
    assert verdict.holds and verdict.residual == 0
    miss = concurrency(l1, l2, HLine(1, 1, 1))
    assert not miss.holds and miss.residual != 0
    with pytest.raises(DuplicateLine):
        concurrency(l1, HLine(2, 0, 0), l3)


def test_collinearity_verdict_and_duplicates():
    a, b, c = HPoint(0, 0, 1), HPoint(1, 1, 1), HPoint(2, 2, 1)
    verdict = collinearity(a, b, c)
    assert verdict.holds and verdict.residual == 0
    off = collinearity(a, b, HPoint(2, 3, 1))
    assert not off.holds and off.residual != 0
    with pytest.raises(DuplicatePoints):
        collinearity(a, a, b)


def test_float_residuals_are_scale_invariant():
    lines = [HLine(1.0, 0.3, -0.2), HLine(0.1, 1.0, 0.4), HLine(0.5, 0.5, 1.0)]
    small = concurrency(*lines)
    big = concurrency(*(HLine(*(1e6 * v for v in l.coords)) for l in lines))
    assert small.residual == pytest.approx(big.residual, rel=1e-12)


def test_projective_gap_properties():
    p = HPoint(1.0, 2.0, 3.0)
    assert projective_gap(p, HPoint(-2.0, -4.0, -6.0)) == pytest.approx(0.0, abs=1e-15)
    q = HPoint(1.0, 2.0, 3.0001)
    assert 0 < projective_gap(p, q) < 1e-4


def test_projective_map_round_trip():
    m = ProjectiveMap(((1, 2, 0), (0, 1, 0), (1, 0, 1)))
    p = HPoint(3, -1, 2)
    assert m.inverse().apply(m.apply(p)) == p
    assert m.compose(m.inverse()).apply(p) == p


def test_projective_map_preserves_incidence():
    m = ProjectiveMap(((2, 1, 0), (0, 3, 1), (1, 0, 1)))
    p, q = HPoint(1, 2, 1), HPoint(-1, 0, 1)
    l = join(p, q)
    assert incident(m.apply(p), m.apply_line(l))
    assert incident(m.apply(q), m.apply_line(l))


def test_singular_map_rejected():
    with pytest.raises(SingularMap):
        ProjectiveMap(((1, 2, 3), (2, 4, 6), (0, 0, 1)))


def test_map_from_correspondence_hits_targets():
    src = (HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(0, 1, 1), HPoint(1, 1, 1))
    dst = (HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(0, 0, 1), HPoint(1, 1, 1))
    m = map_from_correspondence(src, dst)
    for s, d in zip(src, dst):
        assert m.apply(s) == d


def test_map_from_correspondence_degenerate_quadruple():
    src = (HPoint(0, 0, 1), HPoint(1, 0, 1), HPoint(2, 0, 1), HPoint(1, 1, 1))
    dst = (HPoint(1, 0, 0), HPoint(0, 1, 0), HPoint(0, 0, 1), HPoint(1, 1, 1))
    with pytest.raises(DegenerateQuadruple):
        map_from_correspondence(src, dst)


def test_coincident_tolerates_float_noise():
    p = HPoint(1.0, 2.0, 3.0)
    q = HPoint(1.0 + 1e-13, 2.0, 3.0)
    assert coincident(p, q)
    assert not coincident(p, HPoint(1.001, 2.0, 3.0))
