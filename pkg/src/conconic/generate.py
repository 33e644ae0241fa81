"""Seeded random instance generators for tests and experiments.

Everything takes an explicit ``random.Random`` so runs are reproducible
from a seed.  Exact generators draw small rationals and keep all derived
data in ``Fraction`` arithmetic; the conconic families are constructed,
not searched: six-point instances come from solving the concurrency
condition for the last foot (the concurrency determinant is linear in
that foot's side parameter once every other foot is fixed), and on-conic
sextuples come from pushing rational circle points through a random
projective map.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cevians import (
    SIDES,
    CevianFeet,
    Triangle,
    build_config,
    cevians_through_point,
    check_conditions,
    isogonal_feet,
    isotomic_feet,
    validate_feet,
)
from .errors import GeometryError
from .linalg import cross, det3
from .projective import HLine, HPoint, ProjectiveMap, join, meet
from .scalars import Scalar, div

# ----- scalar and point helpers -------------------------------------------


def random_fraction(rnd: random.Random, max_den: int = 12) -> Fraction:
    """A rational strictly between 0 and 1 with a small denominator."""
    den = rnd.randint(2, max_den)
    num = rnd.randint(1, den - 1)
    return Fraction(num, den)


def random_triangle(rnd: random.Random, span: int = 6) -> Triangle:
    """A nondegenerate triangle with small rational vertices."""
    while True:
        coords = [
            Fraction(rnd.randint(-2 * span, 2 * span), rnd.randint(1, 4))
            for _ in range(6)
        ]
        pts = tuple(HPoint(coords[2 * i], coords[2 * i + 1], 1) for i in range(3))
        try:
            return Triangle(*pts)
        except GeometryError:
            continue


def float_triangle(rnd: random.Random, min_angle: float = 15.0, max_angle: float = 150.0) -> Triangle:
    """A float triangle with all angles inside the given degree range.

    Placed with random position, scale, rotation, and orientation.
    """
    while True:
        a = rnd.uniform(min_angle, max_angle)
        b = rnd.uniform(min_angle, max_angle)
        c = 180.0 - a - b
        if min_angle <= c <= max_angle:
            break
    base = rnd.uniform(1.0, 5.0)
    ta, tb = math.radians(a), math.radians(b)
    apex_x = base * math.tan(tb) / (math.tan(ta) + math.tan(tb))
    pts = [(0.0, 0.0), (base, 0.0), (apex_x, apex_x * math.tan(ta))]
    rot = rnd.uniform(0.0, 2.0 * math.pi)
    ox, oy = rnd.uniform(-3.0, 3.0), rnd.uniform(-3.0, 3.0)
    cr, sr = math.cos(rot), math.sin(rot)
    pts = [(ox + x * cr - y * sr, oy + x * sr + y * cr) for x, y in pts]
    if rnd.random() < 0.5:
        pts = [pts[0], pts[2], pts[1]]
    return Triangle(*(HPoint(x, y, 1.0) for x, y in pts))


def _affine(p: HPoint) -> Tuple[Scalar, Scalar]:
    x, y, z = p.coords
    return div(x, z), div(y, z)


def foot_point(tri: Triangle, side: str, t: Scalar) -> HPoint:
    """The point P + t (Q - P) on the named side with endpoints (P, Q)."""
    p, q = tri.side_endpoints(side)
    px, py = _affine(p)
    qx, qy = _affine(q)
    return HPoint(px + t * (qx - px), py + t * (qy - py), 1)


def feet_from_params(tri: Triangle, params: Sequence[Scalar]) -> CevianFeet:
    """Feet from six side parameters in the order (a1, b1, c1, a2, b2, c2)."""
    if len(params) != 6:
        raise ValueError("six side parameters are required")
    first = tuple(foot_point(tri, side, t) for side, t in zip(SIDES, params[:3]))
    second = tuple(foot_point(tri, side, t) for side, t in zip(SIDES, params[3:]))
    return CevianFeet.from_triples(first, second)


def random_params(rnd: random.Random, n: int = 6, max_den: int = 12) -> List[Fraction]:
    """Distinct-per-side random foot parameters, away from the vertices."""
    while True:
        params = [random_fraction(rnd, max_den) for _ in range(n)]
        if n < 6 or all(params[i] != params[i + 3] for i in range(3)):
            return params


# ----- conconic cevian configurations --------------------------------------


def _raw_join(p: HPoint, q) -> Tuple[Scalar, ...]:
    coords = q.coords if isinstance(q, HPoint) else q
    return cross(p.coords, coords)


def solve_concurrent_params(
    rnd: random.Random, tri: Triangle, max_den: int = 12
) -> Optional[List[Fraction]]:
    """Six foot parameters whose cevian configuration is concurrent.

    Five parameters are drawn at random and the last (the second C-foot)
    is solved from the concurrency condition, which is linear in it when
    all joins and meets are left uncanonicalized.  Returns None when the
    draw degenerates (no unique solution, or a foot hits a vertex).
    """
    t_a1, t_b1, t_c1, t_a2, t_b2 = (random_fraction(rnd, max_den) for _ in range(5))
    a1 = foot_point(tri, "BC", t_a1)
    b1 = foot_point(tri, "CA", t_b1)
    c1 = foot_point(tri, "AB", t_c1)
    a2 = foot_point(tri, "BC", t_a2)
    b2 = foot_point(tri, "CA", t_b2)

    aa1 = join(tri.A, a1)
    bb1 = join(tri.B, b1)
    cc1 = join(tri.C, c1)
    aa2 = join(tri.A, a2)
    bb2 = join(tri.B, b2)
    v1 = meet(cc1, aa2)
    w1 = meet(aa1, bb2)
    row_bv1 = _raw_join(tri.B, v1)
    row_cw1 = _raw_join(tri.C, w1)

    def det_at(t: Fraction) -> Fraction:
        c2 = foot_point(tri, "AB", t)
        cc2 = _raw_join(tri.C, c2)
        u1 = cross(bb1.coords, cc2)
        row_au1 = cross(tri.A.coords, u1)
        return det3((row_au1, row_bv1, row_cw1))

    d0 = det_at(Fraction(0))
    d1 = det_at(Fraction(1))
    if d0 == d1:
        return None
    t_c2 = Fraction(d0, d0 - d1)
    if t_c2 in (0, 1) or t_c2 == t_c1:
        return None
    return [t_a1, t_b1, t_c1, t_a2, t_b2, t_c2]


def concurrency_solved_instance(
    rnd: random.Random, max_den: int = 12
) -> Tuple[Triangle, CevianFeet, List[Fraction]]:
    """An exact configuration satisfying all four equivalent conditions."""
    while True:
        tri = random_triangle(rnd)
        params = solve_concurrent_params(rnd, tri, max_den)
        if params is None:
            continue
        feet = feet_from_params(tri, params)
        try:
            validate_feet(tri, feet)
            cfg = build_config(tri, feet)
        except GeometryError:
            continue
        report = check_conditions(cfg)
        if report.all_hold:
            return tri, feet, params


def conjugate_instance(
    rnd: random.Random, kind: str, max_den: int = 12
) -> Tuple[Triangle, CevianFeet]:
    """A configuration whose second triple is the named conjugate of the first."""
    conjugate = {"isogonal": isogonal_feet, "isotomic": isotomic_feet}[kind]
    while True:
        tri = random_triangle(rnd)
        first = tuple(
            foot_point(tri, side, random_fraction(rnd, max_den)) for side in SIDES
        )
        try:
            second = conjugate(tri, first)
            feet = CevianFeet.from_triples(first, second)
            validate_feet(tri, feet)
            build_config(tri, feet)
        except GeometryError:
            continue
        return tri, feet


def random_interior_point(rnd: random.Random, tri: Triangle, max_den: int = 10) -> HPoint:
    """A rational point strictly inside the triangle (positive barycentrics)."""
    w = [Fraction(rnd.randint(1, max_den), 1) for _ in range(3)]
    total = sum(w)
    ax, ay = _affine(tri.A)
    bx, by = _affine(tri.B)
    cx, cy = _affine(tri.C)
    x = (w[0] * ax + w[1] * bx + w[2] * cx) / total
    y = (w[0] * ay + w[1] * by + w[2] * cy) / total
    return HPoint(x, y, 1)


def through_point_instance(
    rnd: random.Random, max_den: int = 10
) -> Tuple[Triangle, CevianFeet, HPoint, HPoint]:
    """A configuration whose two cevian triples pass through two points."""
    while True:
        tri = random_triangle(rnd)
        p1 = random_interior_point(rnd, tri, max_den)
        p2 = random_interior_point(rnd, tri, max_den)
        if p1 == p2:
            continue
        try:
            first = cevians_through_point(tri, p1)
            second = cevians_through_point(tri, p2)
            feet = CevianFeet.from_triples(first, second)
            validate_feet(tri, feet)
            build_config(tri, feet)
        except GeometryError:
            continue
        return tri, feet, p1, p2


def perturbed_failing_instance(
    rnd: random.Random, max_den: int = 12
) -> Tuple[Triangle, CevianFeet]:
    """A conconic instance knocked off by nudging one foot parameter.

    The perturbed configuration is re-checked: all four conditions must
    fail (generic perturbations do; degenerate ones are redrawn).
    """
    while True:
        tri, _, params = concurrency_solved_instance(rnd, max_den)
        idx = rnd.randrange(6)
        delta = Fraction(rnd.choice([-1, 1]), rnd.randint(7, 40))
        nudged = list(params)
        nudged[idx] = nudged[idx] + delta
        if not 0 < nudged[idx] < 1 or nudged[idx] == nudged[(idx + 3) % 6]:
            continue
        feet = feet_from_params(tri, nudged)
        try:
            validate_feet(tri, feet)
            cfg = build_config(tri, feet)
            report = check_conditions(cfg)
        except GeometryError:
            continue
        if not any(report.booleans):
            return tri, feet


# ----- sextuples on (and off) conics ---------------------------------------


def random_projective_map(rnd: random.Random, span: int = 9) -> ProjectiveMap:
    """A random invertible integer projective map."""
    while True:
        rows = tuple(
            tuple(rnd.randint(-span, span) for _ in range(3)) for _ in range(3)
        )
        try:
            return ProjectiveMap(rows)
        except GeometryError:
            continue


def _circle_point(t: Fraction) -> HPoint:
    """Rational unit-circle point of parameter t."""
    return HPoint(1 - t * t, 2 * t, 1 + t * t)


def _distinct_fractions(rnd: random.Random, n: int, span: int = 9) -> List[Fraction]:
    seen = set()
    out: List[Fraction] = []
    while len(out) < n:
        t = Fraction(rnd.randint(-4 * span, 4 * span), rnd.randint(1, span))
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def conconic_sextuple(rnd: random.Random) -> Tuple[HPoint, ...]:
    """Six exact points on one common (randomly transformed) conic."""
    pmap = random_projective_map(rnd)
    return tuple(pmap.apply(_circle_point(t)) for t in _distinct_fractions(rnd, 6))


def cotangent_sextuple(rnd: random.Random) -> Tuple[HLine, ...]:
    """Six exact tangent lines of one common conic."""
    pmap = random_projective_map(rnd)
    ts = _distinct_fractions(rnd, 6)
    lines = []
    for t in ts:
        p = _circle_point(t)
        tangent = HLine(p.coords[0], p.coords[1], -p.coords[2])
        lines.append(pmap.apply_line(tangent))
    return tuple(lines)


def random_sextuple(rnd: random.Random, span: int = 8) -> Tuple[HPoint, ...]:
    """Six distinct random rational points with no three collinear."""
    while True:
        pts = [
            HPoint(
                Fraction(rnd.randint(-2 * span, 2 * span), rnd.randint(1, 3)),
                Fraction(rnd.randint(-2 * span, 2 * span), rnd.randint(1, 3)),
                1,
            )
            for _ in range(6)
        ]
        if len({p.coords for p in pts}) < 6:
            continue
        if any(
            det3((pts[i].coords, pts[j].coords, pts[k].coords)) == 0
            for i in range(6)
            for j in range(i + 1, 6)
            for k in range(j + 1, 6)
        ):
            continue
        return tuple(pts)


def random_line_sextuple(rnd: random.Random, span: int = 8) -> Tuple[HLine, ...]:
    """Six distinct random rational lines with no three concurrent."""
    while True:
        try:
            lines = [
                HLine(
                    rnd.randint(-span, span),
                    rnd.randint(-span, span),
                    rnd.randint(-span, span),
                )
                for _ in range(6)
            ]
        except ValueError:
            continue
        if len({l.coords for l in lines}) < 6:
            continue
        if any(
            det3((lines[i].coords, lines[j].coords, lines[k].coords)) == 0
            for i in range(6)
            for j in range(i + 1, 6)
            for k in range(j + 1, 6)
        ):
            continue
        return tuple(lines)
