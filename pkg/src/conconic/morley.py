"""Angle trisectors of a triangle and the conics they generate.

Each vertex hosts two interior trisectors, so the six of them form a
cevian configuration once each trisector is labeled by the foot it cuts
on the opposite side.  The labeling used here pairs first cevians with
the side named at each vertex's first neighbor (the trisector out of A
hugging AB is AA1, the one hugging AC is AA2, and cyclically), which
makes the derived points U1, V1, W1 land on the vertices of the inner
equilateral triangle formed by adjacent-trisector meets.  The labeling
is self-checked at runtime against that equilateral triangle and flipped
per vertex if needed.

Trisection works on signed angles, so both triangle orientations are
handled without special cases.  Everything here is float-mode: angles
come from ``atan2`` and the trisectors are transcendental in the vertex
coordinates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Tuple

from .cevians import (
    CevianFeet,
    ConditionReport,
    CevianConfig,
    Triangle,
    build_config,
    check_conditions,
)
from .conics import Conic, conic_through_points, dual_conic
from .errors import (
    ConcurrencyViolated,
    LabelingSelfCheckFailed,
    TheoremConsistencyError,
)
from .projective import HLine, HPoint, concurrency, join, meet
from .scalars import DEFAULT_EPS

# Tolerance for matching computed meets against the equilateral triangle
# and for verifying fitted conics: these are second-generation floats
# (meets of fitted objects), so they get a looser budget than raw algebra.
_CHECK_TOL = 1e-6


def _affine_xy(p: HPoint) -> Tuple[float, float]:
    x, y, z = (float(v) for v in p.coords)
    return (x / z, y / z)


def _direction_line(origin: Tuple[float, float], direction: Tuple[float, float]) -> HLine:
    ox, oy = origin
    dx, dy = direction
    return join(HPoint(ox, oy, 1.0), HPoint(dx, dy, 0.0))


def _rotate(v: Tuple[float, float], angle: float) -> Tuple[float, float]:
    c, s = math.cos(angle), math.sin(angle)
    return (v[0] * c - v[1] * s, v[0] * s + v[1] * c)


def _trisectors(vertex: Tuple[float, float], toward: Tuple[float, float], far: Tuple[float, float]) -> Tuple[HLine, HLine]:
    """The two interior trisectors at a vertex, nearest-first.

    ``toward`` fixes the arm the angle is measured from; the returned pair
    is (trisector nearest that arm, trisector nearest the other arm).
    """
    u = (toward[0] - vertex[0], toward[1] - vertex[1])
    w = (far[0] - vertex[0], far[1] - vertex[1])
    theta = math.atan2(u[0] * w[1] - u[1] * w[0], u[0] * w[0] + u[1] * w[1])
    return (
        _direction_line(vertex, _rotate(u, theta / 3.0)),
        _direction_line(vertex, _rotate(u, 2.0 * theta / 3.0)),
    )


def morley_triangle(tri: Triangle) -> Tuple[HPoint, HPoint, HPoint]:
    """Vertices of the inner equilateral triangle of adjacent trisectors.

    Ordered (U1, V1, W1) = (meet nearest side BC, nearest CA, nearest AB).
    """
    a, b, c = (_affine_xy(v) for v in tri.vertices)
    near_ab, near_ac = _trisectors(a, b, c)
    near_bc, near_ba = _trisectors(b, c, a)
    near_ca, near_cb = _trisectors(c, a, b)
    u1 = meet(near_bc, near_cb)
    v1 = meet(near_ca, near_ac)
    w1 = meet(near_ab, near_ba)
    return (u1, v1, w1)


def first_morley_center(tri: Triangle) -> HPoint:
    """Centroid of the equilateral trisector triangle."""
    u1, v1, w1 = morley_triangle(tri)
    xs = [_affine_xy(p) for p in (u1, v1, w1)]
    return HPoint(sum(x for x, _ in xs) / 3.0, sum(y for _, y in xs) / 3.0, 1.0)


def second_morley_center(tri: Triangle, eps: float = DEFAULT_EPS) -> HPoint:
    """Common point of the cevians from each vertex to the far trisector meet.

    The three lines A-U1, B-V1, C-W1 are concurrent; the meet of the first
    two is returned after checking the third passes through it.
    """
    u1, v1, w1 = morley_triangle(tri)
    la = join(tri.A, u1)
    lb = join(tri.B, v1)
    lc = join(tri.C, w1)
    verdict = concurrency(la, lb, lc, eps)
    if not verdict.holds:
        raise ConcurrencyViolated(
            f"trisector-meet cevians are not concurrent (residual {verdict.residual!r})"
        )
    return meet(la, lb)


@dataclass(frozen=True)
class MorleyCenters:
    """The two distinguished concurrence points of the configuration."""

    first: HPoint
    second: HPoint


@dataclass(frozen=True)
class MorleyData:
    """Full trisector cevian configuration with its fitted conics.

    ``trisector_cevians`` are the six trisectors as cevian lines in the
    order (AA1, BB1, CC1, AA2, BB2, CC2); ``inner_conic`` passes through
    the six derived points and ``cevian_conic`` is tangent to all six
    trisectors.
    """

    triangle: Triangle
    trisector_cevians: Tuple[HLine, HLine, HLine, HLine, HLine, HLine]
    feet: CevianFeet
    morley_triangle: Tuple[HPoint, HPoint, HPoint]
    config: CevianConfig
    report: ConditionReport
    centers: MorleyCenters
    inner_conic: Conic
    cevian_conic: Conic


def _feet_for_flips(tri: Triangle, trisectors, flips) -> CevianFeet:
    """Feet of the six trisectors under per-vertex first/second swaps."""
    sides = (tri.bc, tri.ca, tri.ab)
    first = []
    second = []
    for (near_first, near_second), side, flip in zip(trisectors, sides, flips):
        one, two = (near_second, near_first) if flip else (near_first, near_second)
        first.append(meet(one, side))
        second.append(meet(two, side))
    return CevianFeet.from_triples(tuple(first), tuple(second))


def _matches_morley(cfg: CevianConfig, target, tol: float) -> bool:
    from .projective import projective_gap

    pairs = zip((cfg.U1, cfg.V1, cfg.W1), target)
    return all(projective_gap(got, want) <= tol for got, want in pairs)


def morley_config(tri: Triangle, eps: float = DEFAULT_EPS) -> MorleyData:
    """Build the trisector cevian configuration and verify its conics.

    The five-of-six fits certify the configuration: the conic through five
    derived points must pick up the sixth, and the dual fit through five
    trisectors must be tangent to the sixth.
    """
    a, b, c = (_affine_xy(v) for v in tri.vertices)
    trisectors = (
        _trisectors(a, b, c),  # at A: (near AB, near AC)
        _trisectors(b, c, a),  # at B: (near BC, near BA)
        _trisectors(c, a, b),  # at C: (near CA, near CB)
    )
    target = morley_triangle(tri)

    cfg = None
    for flips in itertools.product((False, True), repeat=3):
        feet = _feet_for_flips(tri, trisectors, flips)
        candidate = build_config(tri, feet)
        if _matches_morley(candidate, target, _CHECK_TOL):
            cfg = candidate
            break
    if cfg is None:
        raise LabelingSelfCheckFailed(
            "no per-vertex labeling reproduces the equilateral trisector triangle"
        )

    report = check_conditions(cfg, eps)

    inner = conic_through_points(
        (cfg.X1, cfg.Y1, cfg.Z1, cfg.X2, cfg.Y2), eps
    )
    z2_residual = _normalized_value(inner, cfg.Z2)
    if z2_residual > _CHECK_TOL:
        raise TheoremConsistencyError(
            f"conic through five derived points misses the sixth (residual {z2_residual:.3e})",
            verdicts=report,
        )

    lines = cfg.cevian_lines(1) + cfg.cevian_lines(2)
    duals = tuple(HPoint(*l.coords) for l in lines)
    dual_fit = conic_through_points(duals[:5], eps)
    cevian_conic = dual_conic(dual_fit, eps)
    sixth_residual = _normalized_value(dual_fit, duals[5])
    if sixth_residual > _CHECK_TOL:
        raise TheoremConsistencyError(
            f"conic tangent to five trisectors misses the sixth (residual {sixth_residual:.3e})",
            verdicts=report,
        )

    la = join(tri.A, cfg.U1)
    lb = join(tri.B, cfg.V1)
    lc = join(tri.C, cfg.W1)
    verdict = concurrency(la, lb, lc, eps)
    if not verdict.holds:
        raise ConcurrencyViolated(
            f"trisector-meet cevians are not concurrent (residual {verdict.residual!r})"
        )
    centers = MorleyCenters(first=first_morley_center(tri), second=meet(la, lb))

    return MorleyData(
        triangle=tri,
        trisector_cevians=lines,
        feet=cfg.feet,
        morley_triangle=(cfg.U1, cfg.V1, cfg.W1),
        config=cfg,
        report=report,
        centers=centers,
        inner_conic=inner,
        cevian_conic=cevian_conic,
    )


def _normalized_value(conic: Conic, p: HPoint) -> float:
    from .linalg import row_norm

    num = abs(float(conic.value2(p.coords)))
    frob = math.sqrt(sum(float(v) ** 2 for row in conic.gram for v in row))
    return num / (frob * row_norm(p.coords) ** 2)


def equilateral_side_spread(tri: Triangle) -> Tuple[float, float]:
    """Mean side length of the trisector triangle and its relative spread."""
    u1, v1, w1 = morley_triangle(tri)
    pts = [_affine_xy(p) for p in (u1, v1, w1)]
    sides = [
        math.dist(pts[i], pts[(i + 1) % 3]) for i in range(3)
    ]
    mean = sum(sides) / 3.0
    spread = (max(sides) - min(sides)) / mean
    return mean, spread
