"""Points, lines, and projective maps of the real projective plane.

Coordinates are homogeneous triples over either exact rationals or floats.
Both ``HPoint`` and ``HLine`` canonicalize on construction, so equality up
to scale is ordinary equality of the stored triple.  Incidence follows the
usual conventions: a point (x : y : z) lies on a line (a : b : c) when
ax + by + cz = 0, the line at infinity is (0 : 0 : 1), and points with
z = 0 are directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import (
    CoincidentLines,
    CoincidentPoints,
    DegenerateQuadruple,
    DuplicateLine,
    DuplicatePoints,
    SingularMap,
)
from .linalg import adjugate3, cross, det3, dot, matmul3, matvec3, row_norm, transpose3
from .scalars import DEFAULT_EPS, Scalar, all_exact, canonical_tuple, near_zero

Triple = Tuple[Scalar, Scalar, Scalar]


class _HTriple:
    """Shared behaviour of homogeneous points and lines."""

    __slots__ = ("coords",)

    def __init__(self, x: Scalar, y: Scalar, z: Scalar):
        object.__setattr__(self, "coords", canonical_tuple((x, y, z)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def x(self) -> Scalar:
        return self.coords[0]

    @property
    def y(self) -> Scalar:
        return self.coords[1]

    @property
    def z(self) -> Scalar:
        return self.coords[2]

    @property
    def exact(self) -> bool:
        return all_exact(self.coords)

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        body = " : ".join(str(c) for c in self.coords)
        return f"{type(self).__name__}({body})"


class HPoint(_HTriple):
    """A point of the projective plane as a homogeneous triple."""

    @classmethod
    def from_xy(cls, x: Scalar, y: Scalar) -> "HPoint":
        return cls(x, y, 1 if all_exact((x, y)) else 1.0)

    @classmethod
    def direction(cls, dx: Scalar, dy: Scalar) -> "HPoint":
        return cls(dx, dy, 0 if all_exact((dx, dy)) else 0.0)

    @property
    def at_infinity(self) -> bool:
        return self.coords[2] == 0

    def to_xy(self) -> Tuple[Scalar, Scalar]:
        """Affine coordinates; only valid for finite points."""
        if self.at_infinity:
            raise ZeroDivisionError("point at infinity has no affine coordinates")
        x, y, z = self.coords
        if self.exact:
            return Fraction(x, z), Fraction(y, z)
        return x / z, y / z


class HLine(_HTriple):
    """A line of the projective plane, as coefficients of ax + by + cz = 0."""

    @classmethod
    def at_infinity(cls) -> "HLine":
        return cls(0, 0, 1)


LINE_AT_INFINITY = HLine.at_infinity()


def _coincident(u: Triple, v: Triple, raw: Triple, eps: float) -> bool:
    if all_exact(raw):
        return all(c == 0 for c in raw)
    scale = row_norm(u) * row_norm(v)
    return all(near_zero(c, scale, eps) for c in raw)


def coincident(a, b, eps: float = DEFAULT_EPS) -> bool:
    """Whether two points (or two lines) agree up to scale and tolerance."""
    return _coincident(a.coords, b.coords, cross(a.coords, b.coords), eps)


def join(p: HPoint, q: HPoint, eps: float = DEFAULT_EPS) -> HLine:
    """The line through two distinct points."""
    raw = cross(p.coords, q.coords)
    if _coincident(p.coords, q.coords, raw, eps):
        raise CoincidentPoints(f"cannot join {p} with {q}")
    return HLine(*raw)


def meet(l: HLine, m: HLine, eps: float = DEFAULT_EPS) -> HPoint:
    """The intersection point of two distinct lines."""
    raw = cross(l.coords, m.coords)
    if _coincident(l.coords, m.coords, raw, eps):
        raise CoincidentLines(f"cannot meet {l} with {m}")
    return HPoint(*raw)


def incident(p: HPoint, l: HLine, eps: float = DEFAULT_EPS) -> bool:
    value = dot(p.coords, l.coords)
    if all_exact(p.coords) and all_exact(l.coords):
        return value == 0
    return near_zero(value, row_norm(p.coords) * row_norm(l.coords), eps)


def _triple_det_zero(rows: Sequence[Triple], eps: float) -> bool:
    d = det3(rows)
    if all_exact([v for r in rows for v in r]):
        return d == 0
    scale = math.prod(row_norm(r) for r in rows)
    return near_zero(d, scale, eps)


def collinear(points: Sequence[HPoint], eps: float = DEFAULT_EPS) -> bool:
    """Whether all the points lie on one line (trivially true below 3)."""
    pts = list(points)
    if len(pts) < 3:
        return True
    anchor_a, anchor_b = pts[0], pts[1]
    return all(
        _triple_det_zero((anchor_a.coords, anchor_b.coords, p.coords), eps)
        for p in pts[2:]
    )


def concurrent(lines: Sequence[HLine], eps: float = DEFAULT_EPS) -> bool:
    """Whether all the lines pass through one point (trivially true below 3)."""
    ls = list(lines)
    if len(ls) < 3:
        return True
    anchor_a, anchor_b = ls[0], ls[1]
    return all(
        _triple_det_zero((anchor_a.coords, anchor_b.coords, l.coords), eps)
        for l in ls[2:]
    )


@dataclass(frozen=True)
class IncidenceVerdict:
    """Signed residual and boolean outcome of a determinant predicate.

    In exact mode the residual is the raw 3x3 determinant; in float mode it
    is normalized by the product of the Euclidean row norms, so the verdict
    is scale invariant.
    """

    residual: Scalar
    holds: bool


def _det_verdict(rows: Sequence[Triple], eps: float) -> IncidenceVerdict:
    if all_exact([v for r in rows for v in r]):
        d = det3(rows)
        return IncidenceVerdict(residual=d, holds=(d == 0))
    scale = math.prod(row_norm(r) for r in rows)
    nd = float(det3(rows)) / scale if scale else 0.0
    return IncidenceVerdict(residual=nd, holds=abs(nd) <= eps)


def concurrency(l: HLine, m: HLine, n: HLine, eps: float = DEFAULT_EPS) -> IncidenceVerdict:
    """Residual-and-verdict form of the three-line concurrency test.

    The residual is the determinant of the coefficient triples stacked in
    the given order, so its sign is reproducible.
    """
    for a, b in ((l, m), (l, n), (m, n)):
        if not _coincident(a.coords, b.coords, cross(a.coords, b.coords), eps):
            continue
        raise DuplicateLine(f"lines {a} and {b} coincide")
    return _det_verdict((l.coords, m.coords, n.coords), eps)


def collinearity(p: HPoint, q: HPoint, r: HPoint, eps: float = DEFAULT_EPS) -> IncidenceVerdict:
    """Residual-and-verdict form of the three-point collinearity test."""
    for a, b in ((p, q), (p, r), (q, r)):
        if not _coincident(a.coords, b.coords, cross(a.coords, b.coords), eps):
            continue
        raise DuplicatePoints(f"points {a} and {b} coincide")
    return _det_verdict((p.coords, q.coords, r.coords), eps)


def projective_gap(p: HPoint, q: HPoint) -> float:
    """Distance between points as representatives on the unit sphere.

    Both canonical triples are rescaled to unit Euclidean norm and compared
    with the sign ambiguity minimized out, so the gap is zero exactly when
    the points coincide and is stable for nearly equal float points.
    """
    u = [float(c) for c in p.coords]
    v = [float(c) for c in q.coords]
    nu, nv = row_norm(u), row_norm(v)
    u = [c / nu for c in u]
    v = [c / nv for c in v]
    minus = math.sqrt(sum((a - b) ** 2 for a, b in zip(u, v)))
    plus = math.sqrt(sum((a + b) ** 2 for a, b in zip(u, v)))
    return min(minus, plus)


@dataclass(frozen=True)
class ProjectiveMap:
    """An invertible projectivity, stored as a 3x3 matrix up to scale."""

    matrix: Tuple[Triple, Triple, Triple]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.matrix)
        object.__setattr__(self, "matrix", rows)
        d = det3(rows)
        flat = [v for r in rows for v in r]
        if all_exact(flat):
            singular = d == 0
        else:
            scale = math.prod(row_norm(r) for r in rows)
            singular = near_zero(d, scale, DEFAULT_EPS)
        if singular:
            raise SingularMap("projective map matrix is singular")

    def apply(self, p: HPoint) -> HPoint:
        return HPoint(*matvec3(self.matrix, p.coords))

    def apply_line(self, l: HLine) -> HLine:
        return HLine(*matvec3(transpose3(adjugate3(self.matrix)), l.coords))

    def inverse(self) -> "ProjectiveMap":
        return ProjectiveMap(adjugate3(self.matrix))

    def compose(self, other: "ProjectiveMap") -> "ProjectiveMap":
        """The map sending p to self(other(p))."""
        return ProjectiveMap(matmul3(self.matrix, other.matrix))


def map_from_correspondence(
    src: Sequence[HPoint], dst: Sequence[HPoint], eps: float = DEFAULT_EPS
) -> ProjectiveMap:
    """The unique projectivity sending four source points to four targets.

    Both quadruples must be projective frames: no three of the four points
    collinear.  Raises ``DegenerateQuadruple`` otherwise.
    """
    if len(src) != 4 or len(dst) != 4:
        raise ValueError("correspondence needs exactly four source and target points")
    basis = [_frame_matrix(tuple(p.coords for p in src), eps, "source"),
             _frame_matrix(tuple(p.coords for p in dst), eps, "target")]
    return ProjectiveMap(matmul3(basis[1], adjugate3(basis[0])))


def _frame_matrix(quad: Sequence[Triple], eps: float, label: str):
    """Matrix sending the standard frame e1, e2, e3, e1+e2+e3 to ``quad``."""
    p0, p1, p2, p3 = quad
    exact = all_exact([v for p in quad for v in p])
    # Cramer data for [p0 p1 p2] (a, b, g)^T = p3; each determinant below
    # vanishes exactly when one 3-subset of the quadruple is collinear.
    subsets = [(p0, p1, p2), (p3, p1, p2), (p0, p3, p2), (p0, p1, p3)]
    dets = []
    for rows in subsets:
        value = det3(rows)
        if exact:
            bad = value == 0
        else:
            bad = near_zero(value, math.prod(row_norm(r) for r in rows), eps)
        if bad:
            raise DegenerateQuadruple(f"three of the four {label} points are collinear")
        dets.append(value)
    weights = dets[1:]  # d * (a, b, g); the global factor d is harmless
    return transpose3(tuple(
        tuple(w * c for c in p) for w, p in zip(weights, (p0, p1, p2))
    ))
