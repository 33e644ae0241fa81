from fractions import Fraction

import pytest
from hypothesis import assume, given, settings

from conconic import (
    CevianFeet,
    HPoint,
    Triangle,
    build_config,
    cevians_through_point,
    check_conditions,
    conconic,
    isogonal_feet,
    isotomic_feet,
    solve_sixth_foot,
    to_chart,
    validate_feet,
)
from conconic.errors import (
    DegenerateTriangle,
    FootOffSide,
    NoRealSolution,
    PointAtVertex,
    PointOnSide,
    SideOnConic,
    TheoremConsistencyError,
)
from conconic.generate import (
    concurrency_solved_instance,
    conjugate_instance,
    feet_from_params,
    foot_point,
    perturbed_failing_instance,
    random_params,
    random_triangle,
    through_point_instance,
)

from conftest import exact_triangles, unit_interval_fractions

RIGHT_345 = Triangle(HPoint(0, 0, 1), HPoint(4, 0, 1), HPoint(0, 3, 1))


def median_feet(tri):
    return tuple(foot_point(tri, side, Fraction(1, 2)) for side in ("BC", "CA", "AB"))


def test_triangle_rejects_collinear_vertices():
    with pytest.raises(DegenerateTriangle):
        Triangle(HPoint(0, 0, 1), HPoint(1, 1, 1), HPoint(2, 2, 1))


def test_validate_feet_catches_off_side_and_vertices():
    feet = feet_from_params(RIGHT_345, [Fraction(1, 3)] * 3 + [Fraction(2, 3)] * 3)
    validate_feet(RIGHT_345, feet)
    # a foot away from its side line
    bad = CevianFeet(
        A1=HPoint(1, 1, 1), A2=feet.A2, B1=feet.B1, B2=feet.B2, C1=feet.C1, C2=feet.C2
    )
    with pytest.raises(FootOffSide):
        validate_feet(RIGHT_345, bad)
    # a foot at a vertex
    at_vertex = feet_from_params(
        RIGHT_345, [Fraction(0), Fraction(1, 3), Fraction(1, 3), Fraction(2, 3), Fraction(2, 3), Fraction(2, 3)]
    )
    with pytest.raises(FootOffSide):
        validate_feet(RIGHT_345, at_vertex)


def test_median_feet_oracle():
    a1, b1, c1 = median_feet(RIGHT_345)
    assert a1 == HPoint(2, Fraction(3, 2), 1)
    assert b1 == HPoint(0, Fraction(3, 2), 1)
    assert c1 == HPoint(2, 0, 1)


def test_isogonal_median_foot_oracle():
    # frozen: the isogonal image of the BC midpoint of the 3-4-5 right
    # triangle has barycentric weights (0 : 9 : 16), i.e. (36/25, 48/25)
    out = isogonal_feet(RIGHT_345, median_feet(RIGHT_345))
    assert out[0] == HPoint(Fraction(36, 25), Fraction(48, 25), 1)


def test_symmedian_feet_oracle():
    out = isogonal_feet(RIGHT_345, median_feet(RIGHT_345))
    assert out == (
        HPoint(36, 48, 25),
        HPoint(0, 48, 41),
        HPoint(18, 0, 17),
    )


def test_incenter_feet_oracle():
    # frozen: angle bisector feet of the 3-4-5 right triangle
    feet = cevians_through_point(RIGHT_345, HPoint(1, 1, 1))
    assert feet == (
        HPoint(Fraction(12, 7), Fraction(12, 7), 1),
        HPoint(0, Fraction(4, 3), 1),
        HPoint(Fraction(3, 2), 0, 1),
    )


def test_cevians_through_point_validation():
    with pytest.raises(PointAtVertex):
        cevians_through_point(RIGHT_345, HPoint(0, 0, 1))
    with pytest.raises(PointOnSide):
        cevians_through_point(RIGHT_345, HPoint(2, 0, 1))


@given(exact_triangles(), unit_interval_fractions, unit_interval_fractions, unit_interval_fractions)
@settings(max_examples=40, deadline=None)
def test_isogonal_is_an_involution(tri, ta, tb, tc):
    first = tuple(foot_point(tri, side, t) for side, t in zip(("BC", "CA", "AB"), (ta, tb, tc)))
    out = isogonal_feet(tri, first)
    assert isogonal_feet(tri, out) == first


@given(exact_triangles(), unit_interval_fractions, unit_interval_fractions, unit_interval_fractions)
@settings(max_examples=40, deadline=None)
def test_isotomic_is_an_involution_and_mirrors_parameters(tri, ta, tb, tc):
    first = tuple(foot_point(tri, side, t) for side, t in zip(("BC", "CA", "AB"), (ta, tb, tc)))
    out = isotomic_feet(tri, first)
    assert isotomic_feet(tri, out) == first
    # the isotomic foot sits at the mirrored side parameter 1 - t
    assert out[0] == foot_point(tri, "BC", 1 - ta)
    assert out[1] == foot_point(tri, "CA", 1 - tb)
    assert out[2] == foot_point(tri, "AB", 1 - tc)


def test_build_config_derived_points_oracle():
    # medians meet at the centroid, so all first-index derived points
    # collapse onto it
    tri = RIGHT_345
    first = median_feet(tri)
    second = isogonal_feet(tri, first)
    cfg = build_config(tri, CevianFeet.from_triples(first, second))
    centroid = HPoint(Fraction(4, 3), 1, 1)
    assert cfg.X1 == cfg.Y1 == cfg.Z1 == centroid
    # and the second-index points collapse onto the symmedian point
    assert cfg.X2 == cfg.Y2 == cfg.Z2 == HPoint(Fraction(18, 25), Fraction(24, 25), 1)


def test_duplicate_triples_degrade_gracefully():
    # when the second triple repeats the first, the three six-element
    # determinants vanish trivially (repeated rows) while the concurrency
    # condition is a genuine Ceva-style constraint that generically fails;
    # the report surfaces this instead of raising, because the theorem's
    # distinctness hypotheses are violated
    tri = RIGHT_345
    params = [Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)] * 2
    feet = feet_from_params(tri, params)
    cfg = build_config(tri, feet)
    report = check_conditions(cfg)
    assert report.booleans[:3] == (True, True, True)
    assert not report.concurrent.holds
    assert not report.agree


def test_four_conditions_hold_on_solved_instance(rnd):
    tri, feet, _ = concurrency_solved_instance(rnd)
    report = check_conditions(build_config(tri, feet))
    assert report.agree and report.all_hold
    for verdict in (report.outer6, report.inner6, report.tangent6, report.concurrent):
        assert verdict.residual == 0
    assert report.outer6.witness_conic is not None


def test_four_conditions_fail_on_perturbed_instance(rnd):
    tri, feet = perturbed_failing_instance(rnd)
    report = check_conditions(build_config(tri, feet))
    assert report.agree and not report.all_hold
    for verdict in (report.outer6, report.inner6, report.tangent6, report.concurrent):
        assert verdict.residual != 0


def test_conjugate_families_hold(rnd):
    for kind in ("isogonal", "isotomic"):
        tri, feet = conjugate_instance(rnd, kind)
        report = check_conditions(build_config(tri, feet))
        assert report.all_hold
        assert report.outer6.residual == 0


def test_through_point_family_holds_with_double_line_witness(rnd):
    tri, feet, p1, p2 = through_point_instance(rnd)
    cfg = build_config(tri, feet)
    report = check_conditions(cfg)
    assert report.all_hold
    witness = report.inner6.witness_conic
    assert witness is not None
    assert witness.classify() == "double_line"
    assert witness.contains(p1) and witness.contains(p2)


def test_collapsed_configuration_reports_instead_of_raising():
    # one concurrent triple (medians) collapses the derived points, which
    # makes the six-derived-point determinant vanish while the other three
    # conditions genuinely fail; the report must surface the disagreement
    # rather than raise, because the distinctness hypotheses are violated
    tri = RIGHT_345
    params = [Fraction(1, 3), Fraction(2, 5), Fraction(3, 7),
              Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)]
    cfg = build_config(tri, feet_from_params(tri, params))
    report = check_conditions(cfg)
    assert not report.agree
    assert report.booleans == (False, True, False, False)


def test_exact_duplicate_free_disagreement_raises(monkeypatch):
    # force an artificial disagreement on a duplicate-free exact instance:
    # the guard must refuse to return an inconsistent report
    import conconic.cevians as cevians

    tri, feet, _ = concurrency_solved_instance(__import__("random").Random(5))
    cfg = build_config(tri, feet)

    real = cevians._tolerant_conconic

    def lying(points, eps):
        verdict = real(points, eps)
        return type(verdict)(residual=verdict.residual, holds=not verdict.holds,
                             witness_conic=None, degenerate=verdict.degenerate)

    monkeypatch.setattr(cevians, "_tolerant_conconic", lying)
    with pytest.raises(TheoremConsistencyError):
        cevians.check_conditions(cfg)


def test_solve_sixth_foot_recovers_deleted_foot(rnd):
    tri, feet, params = concurrency_solved_instance(rnd)
    five = (feet.A1, feet.A2, feet.B1, feet.B2, feet.C1)
    solutions = solve_sixth_foot(tri, five, "AB")
    assert feet.C2 in solutions
    # the witness conic meets side AB at C1 and C2, so the determinant has
    # exactly those two roots: one repeats the fixed foot, the other
    # completes a genuinely six-point conic
    for foot in solutions:
        if foot in five:
            continue
        assert conconic(five + (foot,)).holds


def test_solve_sixth_foot_no_real_solution():
    # five points on a tiny circle force complex feet on a distant side
    tri = Triangle(HPoint(-10, -1, 1), HPoint(10, -1, 1), HPoint(0, 12, 1))
    circle5 = (
        HPoint(1, 0, 1),
        HPoint(0, 1, 1),
        HPoint(-1, 0, 1),
        HPoint(3, 4, 5),
        HPoint(-3, 4, 5),
    )
    with pytest.raises(NoRealSolution):
        solve_sixth_foot(tri, circle5, "BC")


def test_solve_sixth_foot_side_on_conic():
    # five feet chosen on two lines, three of them on side BC: the fitted
    # family is the line pair containing BC, so every sixth foot works
    tri = Triangle(HPoint(0, 0, 1), HPoint(4, 0, 1), HPoint(0, 3, 1))
    on_bc = [foot_point(tri, "BC", t) for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))]
    on_ca = [foot_point(tri, "CA", t) for t in (Fraction(1, 3), Fraction(2, 3))]
    with pytest.raises(SideOnConic):
        solve_sixth_foot(tri, tuple(on_bc + on_ca), "BC")


def test_chart_frozen_oracle():
    tri = RIGHT_345
    first = median_feet(tri)
    cfg = build_config(tri, CevianFeet.from_triples(first, isogonal_feet(tri, first)))
    chart = to_chart(cfg)
    assert chart.b1 == Fraction(25, 16)
    assert chart.c2 == Fraction(9, 25)
    assert chart.p == chart.q == Fraction(9, 16)
    assert chart.criterion


def test_chart_criterion_tracks_concurrency(rnd):
    # p = q exactly on conconic instances, p != q on perturbed ones
    for _ in range(10):
        tri, feet, _ = concurrency_solved_instance(rnd)
        cfg = build_config(tri, feet)
        chart = to_chart(cfg)
        assert chart.p == chart.q
    for _ in range(10):
        tri, feet = perturbed_failing_instance(rnd)
        cfg = build_config(tri, feet)
        chart = to_chart(cfg)
        if chart.degenerate:
            continue
        assert chart.p != chart.q
