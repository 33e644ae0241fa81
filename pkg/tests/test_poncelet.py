import math
from fractions import Fraction

import pytest

from conconic import (
    Conic,
    HPoint,
    ProjectiveMap,
    find_point_on_conic,
    poncelet_step,
    porism_check,
    projective_gap,
    sample_on_conic,
    tangent_lines_from,
    trace_chain,
)
from conconic.errors import (
    BaseNotOnConic,
    ChainStuck,
    DegenerateConic,
    NoRealSolution,
    NoTangentLine,
)

UNIT = Conic.from_coeffs((1, 0, 1, 0, 0, -1))
OUTER_R2 = Conic.from_coeffs((1.0, 0.0, 1.0, 0.0, 0.0, -4.0))
INNER_R1 = Conic.from_coeffs((1.0, 0.0, 1.0, 0.0, 0.0, -1.0))


def circle(radius: float) -> Conic:
    return Conic.from_coeffs((1.0, 0.0, 1.0, 0.0, 0.0, -radius * radius))


def affine(p: HPoint):
    x, y, z = (float(v) for v in p.coords)
    return (x / z, y / z)


def test_sample_on_conic_frozen_oracle():
    base = HPoint(-1, 0, 1)
    assert sample_on_conic(UNIT, base, 1) == HPoint(0, 1, 1)
    assert sample_on_conic(UNIT, base, Fraction(1, 2)) == HPoint(3, 4, 5)
    # t = 0 selects the second intersection of the first pencil line
    assert UNIT.contains(sample_on_conic(UNIT, base, 0))


def test_sample_on_conic_is_rational_and_injective():
    base = HPoint(-1, 0, 1)
    seen = set()
    for k in range(-12, 13):
        t = Fraction(k, 7)
        p = sample_on_conic(UNIT, base, t)
        assert p.exact
        assert UNIT.contains(p)
        seen.add(p)
    assert len(seen) == 25


def test_sample_on_conic_validation():
    with pytest.raises(BaseNotOnConic):
        sample_on_conic(UNIT, HPoint(2, 0, 1), 1)
    from conconic import HLine
    pair = Conic.from_line_pair(HLine(1, 0, 0), HLine(0, 1, 0))
    with pytest.raises(DegenerateConic):
        sample_on_conic(pair, HPoint(0, 1, 1), 1)


def test_first_step_orientation_frozen_oracle():
    # from (2, 0) around the unit circle the first link touches the upper
    # half plane: the chain runs counterclockwise to (-1, sqrt3)
    nxt, link = poncelet_step(OUTER_R2, INNER_R1, HPoint(2.0, 0.0, 1.0))
    x, y = affine(nxt)
    assert x == pytest.approx(-1.0, abs=1e-12)
    assert y == pytest.approx(math.sqrt(3.0), abs=1e-12)
    then, _ = poncelet_step(OUTER_R2, INNER_R1, nxt, link)
    x2, y2 = affine(then)
    assert x2 == pytest.approx(-1.0, abs=1e-12)
    assert y2 == pytest.approx(-math.sqrt(3.0), abs=1e-12)


def test_step_is_reversible():
    start = HPoint(2.0, 0.0, 1.0)
    nxt, link = poncelet_step(OUTER_R2, INNER_R1, start)
    # from the next vertex, arriving along the other tangent walks back
    tangents = tangent_lines_from(INNER_R1, nxt)
    other = max(
        tangents,
        key=lambda l: projective_gap(HPoint(*l.coords), HPoint(*link.coords)),
    )
    back, back_link = poncelet_step(OUTER_R2, INNER_R1, nxt, incoming=other)
    assert projective_gap(back, start) < 1e-12
    assert projective_gap(HPoint(*back_link.coords), HPoint(*link.coords)) < 1e-12


def test_step_errors():
    with pytest.raises(BaseNotOnConic):
        poncelet_step(OUTER_R2, INNER_R1, HPoint(1.0, 1.0, 1.0))
    with pytest.raises(NoTangentLine):
        poncelet_step(OUTER_R2, circle(3.0), HPoint(2.0, 0.0, 1.0))


def test_trace_chain_triangle_closure():
    result = trace_chain(OUTER_R2, INNER_R1, HPoint(2.0, 0.0, 1.0))
    assert result.closed
    assert result.closure_step == 3
    assert result.gap <= 1e-12
    assert len(result.points) == 4
    assert len(result.links) == 3


def test_trace_chain_annotates_step_errors():
    with pytest.raises(BaseNotOnConic) as exc:
        trace_chain(OUTER_R2, INNER_R1, HPoint(1.9, 0.0, 1.0))
    assert "step 1" in str(exc.value)


def test_trace_chain_requires_three_steps():
    with pytest.raises(ValueError):
        trace_chain(OUTER_R2, INNER_R1, HPoint(2.0, 0.0, 1.0), max_steps=2)


def test_porism_family_frozen_oracle():
    # concentric circles R = 2, r = 2 cos(pi/n) admit closed n-chains
    for n in range(3, 9):
        inner = circle(2.0 * math.cos(math.pi / n))
        report = porism_check(OUTER_R2, inner, expected_n=n, num_samples=20, closure_tol=1e-9)
        assert report.all_closed, n
        assert report.max_gap < 1e-9
        assert report.steps == (n,) * 20


def test_perturbed_radius_never_closes():
    report_chain = trace_chain(OUTER_R2, circle(1.01), HPoint(2.0, 0.0, 1.0), max_steps=100)
    assert not report_chain.closed
    assert report_chain.gap > 1e-3


def test_porism_is_projectively_invariant():
    shear = ProjectiveMap(((1.0, 0.3, 0.7), (0.1, 1.2, -0.4), (0.0, 0.0, 1.0)))
    outer = OUTER_R2.transformed(shear)
    inner = INNER_R1.transformed(shear)
    report = porism_check(outer, inner, expected_n=3, num_samples=15)
    assert report.all_closed
    assert report.max_gap < 1e-9


def test_find_point_on_conic():
    p = find_point_on_conic(OUTER_R2)
    assert OUTER_R2.contains(p)
    imaginary = Conic.from_coeffs((1.0, 0.0, 1.0, 0.0, 0.0, 1.0))
    with pytest.raises(NoRealSolution):
        find_point_on_conic(imaginary)


def test_porism_check_validates_arguments():
    with pytest.raises(ValueError):
        porism_check(OUTER_R2, INNER_R1, expected_n=2, num_samples=5)
    with pytest.raises(ValueError):
        porism_check(OUTER_R2, INNER_R1, expected_n=3, num_samples=0)
