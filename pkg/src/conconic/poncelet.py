"""Poncelet chains: vertices on an outer conic, links tangent to an inner one.

A chain is traced by repeatedly drawing a tangent line from the current
vertex to the inner conic and crossing over to the second intersection
with the outer conic.  The first step (with no incoming link) picks the
tangent whose touch point is counterclockwise from the current vertex as
seen from the inner conic's center; every later step takes the tangent
that is not the line it arrived on.  Either first choice traces the same
polygon, just in opposite orders.

Closure is detected on canonicalized coordinates with a sign-insensitive
gap, and a chain counts as closed only from three links up.  Links are
treated as full lines throughout (a tangency on a link's extension counts
the same as one on the segment).

Chains need square roots for the tangent construction, so tracing is a
float-mode affair; ``sample_on_conic`` alone stays rational on rational
input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .conics import Conic, tangent_lines_from
from .errors import (
    BaseNotOnConic,
    ChainStuck,
    DegenerateConic,
    GeometryError,
    NoRealSolution,
    NoTangentLine,
)
from .linalg import adjugate3, cross, det3, matvec3, row_norm
from .projective import HLine, HPoint, coincident, projective_gap
from .scalars import DEFAULT_CLOSURE_TOL, DEFAULT_EPS, Scalar, all_exact, div

_BASIS = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _pencil_lines(base: HPoint) -> Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]:
    """Two independent lines through the base point, spanning its pencil."""
    candidates = [cross(base.coords, e) for e in _BASIS]
    nonzero = [c for c in candidates if any(v != 0 for v in c)]
    first = nonzero[0]
    for second in nonzero[1:]:
        if any(v != 0 for v in cross(first, second)):
            return first, second
    raise ValueError("point coordinates are degenerate")  # unreachable


def _point_on_line_away_from(line_coords, base: HPoint, eps: float):
    """A raw point on the line that is projectively distinct from ``base``."""
    candidates = [cross(line_coords, e) for e in _BASIS]
    exact = all_exact(line_coords) and base.exact

    def separation(c) -> float:
        n = row_norm(c) * row_norm(base.coords)
        return row_norm(cross(c, base.coords)) / n if n else 0.0

    if exact:
        for c in candidates:
            if any(v != 0 for v in c) and any(v != 0 for v in cross(c, base.coords)):
                return c
        raise ValueError("line has a single point")  # unreachable for valid lines
    best = max(candidates, key=separation)
    if separation(best) <= eps:
        raise ValueError("line has a single point")  # unreachable for valid lines
    return best


def second_intersection(conic: Conic, base: HPoint, line_coords, eps: float = DEFAULT_EPS) -> HPoint:
    """The other meeting point of a conic and a line through a point on it.

    Returns the base point itself when the line is exactly tangent there; a
    nearly tangent float line yields a second point within roundoff of the
    base.  No tolerance snapping happens here: a tiny quadratic coefficient
    just makes the pencil parameter large, and the homogeneous combination
    degrades gracefully toward the spanning point while staying on the
    conic to machine precision.
    """
    other = _point_on_line_away_from(line_coords, base, eps)
    a = conic.value2(other)
    b = conic.bilinear2(base.coords, other)
    exact = all_exact((a, b)) and base.exact
    if exact:
        if a == 0:
            return HPoint(*other)
        s = div(-2 * b, a)
    else:
        fa, fb = float(a), float(b)
        if fa == 0.0:
            return HPoint(*other)
        s = -2.0 * fb / fa
        if not math.isfinite(s):
            return HPoint(*other)
    if s == 0:
        return base
    combined = tuple(u + s * v for u, v in zip(base.coords, other))
    if not exact and not all(math.isfinite(c) for c in combined):
        return HPoint(*other)
    return HPoint(*combined)


def _frob(m) -> float:
    return math.sqrt(sum(float(v) ** 2 for row in m for v in row))


def sample_on_conic(conic: Conic, base: HPoint, t: Scalar, eps: float = DEFAULT_EPS) -> HPoint:
    """Point of the conic cut out by the pencil line of parameter t at base.

    The pencil through the base point is spanned by two fixed lines, so the
    map t -> point is a rational parametrization of the conic; rational t
    on rational input yields a rational point.
    """
    if conic.is_degenerate(eps):
        raise DegenerateConic("sampling needs a nondegenerate conic")
    if not conic.contains(base, eps):
        raise BaseNotOnConic(f"{base} does not lie on the conic")
    l0, l1 = _pencil_lines(base)
    line = tuple(u + t * v for u, v in zip(l0, l1))
    return second_intersection(conic, base, line, eps)


def conic_center(conic: Conic) -> HPoint:
    """The pole of the line at infinity (finite for central conics)."""
    return HPoint(*matvec3(adjugate3(conic.gram), (0, 0, 1)))


def _affine(p: HPoint) -> Tuple[float, float, float]:
    x, y, z = (float(v) for v in p.coords)
    return (x / z, y / z, 1.0)


def poncelet_step(
    c1: Conic,
    c2: Conic,
    current: HPoint,
    incoming: Optional[HLine] = None,
    eps: float = DEFAULT_EPS,
) -> Tuple[HPoint, HLine]:
    """One link of a chain: the next vertex on c1 and the tangent used.

    With an incoming link the step continues along the other tangent; the
    very first step orients the chain counterclockwise around the inner
    conic's center.
    """
    if not c1.contains(current, eps):
        raise BaseNotOnConic(f"chain vertex {current} does not lie on the outer conic")
    tangents = tangent_lines_from(c2, current, eps)
    if not tangents:
        raise NoTangentLine("chain vertex lies inside the inner conic")
    if incoming is not None:
        link = max(tangents, key=lambda l: projective_gap(HPoint(*l.coords), HPoint(*incoming.coords)))
        if coincident(link, incoming, eps):
            raise ChainStuck("both tangents coincide with the incoming link")
    elif len(tangents) == 1:
        link = tangents[0]
    else:
        center = conic_center(c2)
        if center.at_infinity:
            raise ChainStuck("inner conic has no finite center to orient the first step")
        picked = None
        for cand in tangents:
            touch = HPoint(*matvec3(adjugate3(c2.gram), cand.coords))
            if touch.at_infinity:
                continue
            orientation = det3((_affine(current), _affine(touch), _affine(center)))
            if orientation > 0:
                picked = cand
                break
        if picked is None:
            raise ChainStuck("no tangent advances the chain counterclockwise")
        link = picked
    nxt = second_intersection(c1, current, link.coords, eps)
    if coincident(nxt, current, eps):
        raise ChainStuck("link is tangent to the outer conic; the chain cannot advance")
    return nxt, link


@dataclass(frozen=True)
class ChainResult:
    """Trace of a chain: vertices, links, and how (whether) it closed.

    ``gap`` is the canonical-coordinate distance between the first vertex
    and the vertex at the closure step, or the smallest gap seen from step
    three on when the chain never closed.
    """

    points: Tuple[HPoint, ...]
    links: Tuple[HLine, ...]
    closure_step: Optional[int]
    gap: float

    @property
    def closed(self) -> bool:
        return self.closure_step is not None


def trace_chain(
    c1: Conic,
    c2: Conic,
    start: HPoint,
    max_steps: int = 100,
    closure_tol: float = DEFAULT_CLOSURE_TOL,
    eps: float = DEFAULT_EPS,
) -> ChainResult:
    """Iterate the chain from a starting vertex until it closes.

    Closure at step n means the n-th vertex returns to the start within
    ``closure_tol``; steps below three never count as closure.
    """
    if max_steps < 3:
        raise ValueError("a chain needs at least three steps to close")
    points = [start]
    links = []
    incoming = None
    best_gap = math.inf
    for step in range(1, max_steps + 1):
        try:
            nxt, link = poncelet_step(c1, c2, points[-1], incoming, eps)
        except GeometryError as err:
            raise type(err)(f"step {step}: {err}") from err
        points.append(nxt)
        links.append(link)
        incoming = link
        if step >= 3:
            gap = projective_gap(points[0], nxt)
            best_gap = min(best_gap, gap)
            if gap <= closure_tol:
                return ChainResult(tuple(points), tuple(links), step, gap)
    return ChainResult(tuple(points), tuple(links), None, best_gap)


@dataclass(frozen=True)
class PorismReport:
    """Closure outcomes for chains started at spread-out sample points."""

    all_closed: bool
    max_gap: float
    steps: Tuple[Optional[int], ...]
    gaps: Tuple[float, ...]


def find_point_on_conic(conic: Conic, eps: float = DEFAULT_EPS) -> HPoint:
    """Some real point of a central conic, found by rays from its center."""
    if conic.is_degenerate(eps):
        raise DegenerateConic("point search needs a nondegenerate conic")
    center = conic_center(conic)
    if center.at_infinity:
        raise DegenerateConic("conic has no finite center to search from")
    cx, cy, _ = _affine(center)
    c = float(conic.value2((cx, cy, 1.0)))
    for k in range(16):
        theta = math.pi * k / 16.0
        direction = (math.cos(theta), math.sin(theta), 0.0)
        a = float(conic.value2(direction))
        if a == 0.0 or c / a > 0.0:
            continue
        s = math.sqrt(-c / a)
        return HPoint(cx + s * direction[0], cy + s * direction[1], 1.0)
    raise NoRealSolution("conic appears to have no real points")


def porism_check(
    c1: Conic,
    c2: Conic,
    expected_n: int,
    num_samples: int,
    closure_tol: float = DEFAULT_CLOSURE_TOL,
    eps: float = DEFAULT_EPS,
) -> PorismReport:
    """Whether chains close at the expected step from many starting points.

    Sample vertices are spread over the outer conic through the rational
    parametrization at a found base point; each chain must close at exactly
    ``expected_n`` (an earlier closure also fails the check).
    """
    if expected_n < 3:
        raise ValueError("closure below three steps is not a chain")
    if num_samples < 1:
        raise ValueError("at least one sample is required")
    base = find_point_on_conic(c1, eps)
    steps = []
    gaps = []
    for k in range(num_samples):
        theta = -math.pi + 2.0 * math.pi * (k + 0.5) / num_samples
        start = sample_on_conic(c1, base, math.tan(theta / 2.0), eps)
        result = trace_chain(c1, c2, start, expected_n, closure_tol, eps)
        steps.append(result.closure_step)
        gaps.append(result.gap)
    all_closed = all(s == expected_n for s in steps)
    return PorismReport(
        all_closed=all_closed,
        max_gap=max(gaps),
        steps=tuple(steps),
        gaps=tuple(gaps),
    )
