"""Conics as symmetric quadratic forms, with the six-point test.

A conic with coefficient vector (a, b, c, d, e, f) is the zero set of

    a x^2 + b xy + c y^2 + d xz + e yz + f z^2.

Coefficients are stored in that fixed monomial order (the Veronese order
x^2, xy, y^2, xz, yz, z^2) and canonicalized up to scale, so conic equality
is tuple equality, matching points and lines.  Internally the quadratic
form is carried as the integer-friendly doubled Gram matrix

    [[2a, b,  d ],
     [ b, 2c, e ],
     [ d, e,  2f]]

which evaluates to twice the form; every predicate here only cares about
values up to scale, so the doubling is harmless and keeps exact arithmetic
in plain integers.

Two independent routes to "six points lie on one conic" are provided:
``conconic`` (rank of the stacked Veronese images, i.e. a 6x6 determinant)
and ``conconic_by_fit`` (fit a conic through five of the points, test the
sixth).  They are deliberately separate implementations so each can serve
as an oracle for the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import (
    DegenerateConic,
    DuplicateLines,
    DuplicatePoints,
    IrrationalResult,
    LineOnConic,
    NonUniqueConic,
    ZeroMatrix,
)
from .linalg import (
    adjugate3,
    cross,
    det,
    dot,
    matmul3,
    matvec3,
    normalized_det,
    nullspace,
    row_norm,
    transpose3,
)
from .projective import (
    HLine,
    HPoint,
    ProjectiveMap,
    coincident,
    collinear,
    concurrent,
    join,
    meet,
)
from .scalars import DEFAULT_EPS, Scalar, all_exact, canonical_tuple, exact_sqrt, near_zero

Six = Tuple[Scalar, Scalar, Scalar, Scalar, Scalar, Scalar]

VERONESE_MONOMIALS = ("x^2", "xy", "y^2", "xz", "yz", "z^2")


def veronese(coords: Sequence[Scalar]) -> Six:
    """Image of a coordinate triple under the degree-2 Veronese map."""
    x, y, z = coords
    return (x * x, x * y, y * y, x * z, y * z, z * z)


class Conic:
    """A conic of the projective plane, canonical up to scale."""

    __slots__ = ("coeffs",)

    def __init__(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar, e: Scalar, f: Scalar):
        try:
            object.__setattr__(self, "coeffs", canonical_tuple((a, b, c, d, e, f)))
        except ValueError:
            raise ZeroMatrix("conic coefficients are all zero") from None

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Conic) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("Conic", self.coeffs))

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*{m}" for c, m in zip(self.coeffs, VERONESE_MONOMIALS) if c != 0)
        return f"Conic({terms} = 0)"

    @property
    def exact(self) -> bool:
        return all_exact(self.coeffs)

    @property
    def gram(self) -> Tuple[Tuple[Scalar, ...], ...]:
        """Doubled symmetric matrix of the form (twice the classical one)."""
        a, b, c, d, e, f = self.coeffs
        return ((2 * a, b, d), (b, 2 * c, e), (d, e, 2 * f))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Scalar]) -> "Conic":
        if len(coeffs) != 6:
            raise ValueError("a conic needs exactly six coefficients")
        return cls(*coeffs)

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence[Scalar]]) -> "Conic":
        """Conic of the quadratic form p^T m p (m need not be symmetric)."""
        return cls(
            m[0][0],
            m[0][1] + m[1][0],
            m[1][1],
            m[0][2] + m[2][0],
            m[1][2] + m[2][1],
            m[2][2],
        )

    @classmethod
    def from_line_pair(cls, l1: HLine, l2: HLine) -> "Conic":
        """The degenerate conic consisting of the two lines."""
        u, v = l1.coords, l2.coords
        m = tuple(tuple(u[i] * v[j] for j in range(3)) for i in range(3))
        return cls.from_matrix(m)

    @classmethod
    def from_double_line(cls, l: HLine) -> "Conic":
        """The rank-one conic supported on a single line, counted twice."""
        return cls.from_line_pair(l, l)

    # ----- evaluation ---------------------------------------------------

    def value2(self, coords: Sequence[Scalar]) -> Scalar:
        """Twice the quadratic form at a coordinate triple."""
        return dot(coords, matvec3(self.gram, coords))

    def bilinear2(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        """Twice the polar bilinear form."""
        return dot(u, matvec3(self.gram, v))

    def contains(self, p: HPoint, eps: float = DEFAULT_EPS) -> bool:
        value = self.value2(p.coords)
        if self.exact and p.exact:
            return value == 0
        scale = _frob(self.gram) * row_norm(p.coords) ** 2
        return near_zero(value, scale, eps)

    # ----- degeneracy ---------------------------------------------------

    def rank(self, eps: float = DEFAULT_EPS) -> int:
        g = self.gram
        if self.exact:
            if det(g) != 0:
                return 3
            for i in range(3):
                for j in range(3):
                    rows = [r for r in range(3) if r != i]
                    cols = [c for c in range(3) if c != j]
                    minor = (
                        g[rows[0]][cols[0]] * g[rows[1]][cols[1]]
                        - g[rows[0]][cols[1]] * g[rows[1]][cols[0]]
                    )
                    if minor != 0:
                        return 2
            return 1
        m = [[float(v) for v in row] for row in g]
        r = 0
        threshold = None
        for _ in range(3):
            pi, pj = max(
                ((i, j) for i in range(r, 3) for j in range(r, 3)),
                key=lambda ij: abs(m[ij[0]][ij[1]]),
            )
            pivot = m[pi][pj]
            if threshold is None:
                threshold = eps * max(abs(pivot), 1e-300)
            if abs(pivot) <= threshold:
                break
            m[r], m[pi] = m[pi], m[r]
            for row in m:
                row[r], row[pj] = row[pj], row[r]
            for i in range(r + 1, 3):
                factor = m[i][r] / m[r][r]
                for j in range(r, 3):
                    m[i][j] -= factor * m[r][j]
            r += 1
        return r

    def is_degenerate(self, eps: float = DEFAULT_EPS) -> bool:
        return self.rank(eps) < 3

    def classify(self, eps: float = DEFAULT_EPS) -> str:
        return {3: "nondegenerate", 2: "line_pair", 1: "double_line"}[self.rank(eps)]

    # ----- polarity -----------------------------------------------------

    def dual(self, eps: float = DEFAULT_EPS) -> "Conic":
        """The conic of tangent lines, via the adjugate form."""
        if self.is_degenerate(eps):
            raise DegenerateConic("degenerate conic has no dual conic")
        return Conic.from_matrix(adjugate3(self.gram))

    def polar(self, p: HPoint) -> HLine:
        raw = matvec3(self.gram, p.coords)
        if all(v == 0 for v in raw):
            raise DegenerateConic(f"{p} is a singular point of the conic")
        return HLine(*raw)

    def pole(self, l: HLine, eps: float = DEFAULT_EPS) -> HPoint:
        if self.is_degenerate(eps):
            raise DegenerateConic("pole is only defined for a nondegenerate conic")
        return HPoint(*matvec3(adjugate3(self.gram), l.coords))

    def is_tangent(self, l: HLine, eps: float = DEFAULT_EPS) -> bool:
        """Whether the line meets the conic in a single doubled point."""
        value = dot(l.coords, matvec3(adjugate3(self.gram), l.coords))
        if self.exact and l.exact:
            return value == 0
        scale = _frob(adjugate3(self.gram)) * row_norm(l.coords) ** 2
        return near_zero(value, scale, eps)

    def touch_point(self, l: HLine, eps: float = DEFAULT_EPS) -> HPoint:
        """Tangency point of a tangent line (the pole of the line)."""
        return self.pole(l, eps)

    def transformed(self, m: ProjectiveMap) -> "Conic":
        """Image conic under the projectivity (push-forward of the zero set)."""
        inv = adjugate3(m.matrix)
        return Conic.from_matrix(matmul3(transpose3(inv), matmul3(self.gram, inv)))


def _frob(m) -> float:
    return math.sqrt(sum(float(v) ** 2 for row in m for v in row))


# ----- line and conic intersections ------------------------------------


def _points_on_line(l: HLine) -> Tuple[Tuple[Scalar, ...], Tuple[Scalar, ...]]:
    """Two independent points spanning the line, as raw triples."""
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    candidates = [cross(l.coords, e) for e in basis]
    ranked = sorted(candidates, key=lambda c: row_norm(c), reverse=True)
    first = ranked[0]
    for second in ranked[1:]:
        if any(v != 0 for v in cross(first, second)):
            return first, second
    raise ValueError("line coordinates are degenerate")  # unreachable for valid lines


def _quadratic_root_pairs(a: Scalar, b: Scalar, c: Scalar, eps: float):
    """Projective roots (lam : mu) of a lam^2 + 2 b lam mu + c mu^2 = 0.

    Returns a list of one pair for a double root, two pairs for distinct
    roots, empty for no real roots.  Raises ``LineOnConic`` when the form
    vanishes identically and ``IrrationalResult`` when exact roots exist
    but are not rational.
    """
    if all_exact((a, b, c)):
        if a == 0 and b == 0 and c == 0:
            raise LineOnConic("every point of the line lies on the conic")
        if a == 0:
            if b == 0:
                return [(1, 0)]
            return [(1, 0), (Fraction(c), Fraction(-2 * b))]
        disc = b * b - a * c
        if disc < 0:
            return []
        root = exact_sqrt(disc)
        if root is None:
            raise IrrationalResult(
                "intersection exists but has irrational coordinates; "
                "use float inputs to get a numeric answer"
            )
        if root == 0:
            return [(Fraction(-b), Fraction(a))]
        return [(-b + root, Fraction(a)), (-b - root, Fraction(a))]
    fa, fb, fc = float(a), float(b), float(c)
    magnitude = max(abs(fa), abs(fb), abs(fc))
    if magnitude == 0.0:
        raise LineOnConic("every point of the line lies on the conic")
    if abs(fa) < abs(fc):
        return [(mu, lam) for lam, mu in _quadratic_root_pairs(fc, fb, fa, eps)]
    if near_zero(fa, magnitude, eps):
        # conic essentially passes through the first basis point
        if near_zero(fb, magnitude, eps):
            return [(1.0, 0.0)]
        return [(1.0, 0.0), (fc, -2.0 * fb)]
    disc = fb * fb - fa * fc
    if near_zero(disc, max(fb * fb, abs(fa * fc)), eps):
        return [(-fb, fa)]
    if disc < 0:
        return []
    root = math.sqrt(disc)
    if fb == 0.0:
        return [(root, fa), (-root, fa)]
    q = -(fb + math.copysign(root, fb))
    return [(q, fa), (fc, q)]


def intersect_line(conic: Conic, l: HLine, eps: float = DEFAULT_EPS) -> Tuple[HPoint, ...]:
    """Real intersection points of a conic and a line.

    Two points for a proper chord, one for a tangent line, none when the
    line misses the conic.  In exact mode an intersection at irrational
    coordinates raises ``IrrationalResult`` rather than approximating.
    """
    p0, p1 = _points_on_line(l)
    a = conic.value2(p0)
    b = conic.bilinear2(p0, p1)
    c = conic.value2(p1)
    pairs = _quadratic_root_pairs(a, b, c, eps)
    points = []
    for lam, mu in pairs:
        coords = tuple(lam * u + mu * v for u, v in zip(p0, p1))
        points.append(HPoint(*coords))
    return tuple(points)


def tangent_lines_from(conic: Conic, p: HPoint, eps: float = DEFAULT_EPS) -> Tuple[HLine, ...]:
    """Tangent lines to a nondegenerate conic through a given point.

    Two lines from an exterior point, one from a point on the conic, none
    from an interior point.  Works in the dual plane: lines through ``p``
    form a line with coordinates ``p``, which is intersected with the dual
    conic.
    """
    dual = conic.dual(eps)
    dual_points = intersect_line(dual, HLine(*p.coords), eps)
    return tuple(HLine(*q.coords) for q in dual_points)


def dual_conic(conic: Conic, eps: float = DEFAULT_EPS) -> Conic:
    """Function form of :meth:`Conic.dual`."""
    return conic.dual(eps)


def classify(conic: Conic, eps: float = DEFAULT_EPS) -> str:
    """Function form of :meth:`Conic.classify`."""
    return conic.classify(eps)


# ----- six points on a conic --------------------------------------------


@dataclass(frozen=True)
class ConconicVerdict:
    """Outcome of a six-element "on one conic" test.

    ``residual`` is the exact 6x6 determinant in exact mode and the
    determinant normalized by the product of the Veronese row norms in
    float mode.  ``witness_conic``, when present, passes through (or is
    tangent to) all six inputs; ``degenerate`` marks a witness of rank
    below three, including the case where no single witness is determined.
    """

    residual: Scalar
    holds: bool
    witness_conic: Optional[Conic] = None
    degenerate: bool = False


def _check_distinct(items: Sequence, eps: float, exc=DuplicatePoints) -> None:
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if coincident(items[i], items[j], eps):
                raise exc(f"inputs {i} and {j} coincide: {items[i]}")


def veronese_residual(coord_rows: Sequence[Sequence[Scalar]], eps: float):
    rows = [veronese(c) for c in coord_rows]
    if all_exact([v for r in rows for v in r]):
        d = det(rows)
        return d, d == 0
    nd = normalized_det(rows)
    return nd, abs(nd) <= eps


def _point_witness(pts: Sequence[HPoint], eps: float):
    """Fit a conic through some five of the points; None when no five-subset
    determines one (the six points then lie on a pencil of conics)."""
    for hold_out in (5, 0, 1, 2, 3, 4):
        five = [p for i, p in enumerate(pts) if i != hold_out]
        try:
            return conic_through_points(five, eps)
        except NonUniqueConic:
            continue
    return None


def conconic(points: Sequence[HPoint], eps: float = DEFAULT_EPS) -> ConconicVerdict:
    """Whether six pairwise-distinct points all lie on one conic.

    The determinant of the stacked Veronese images vanishes exactly when
    some conic passes through all six points; the witness conic is fitted
    through the first five points whenever the verdict holds.
    """
    pts = list(points)
    if len(pts) != 6:
        raise ValueError("the conconicity test needs exactly six points")
    _check_distinct(pts, eps)
    residual, holds = veronese_residual([p.coords for p in pts], eps)
    witness = _point_witness(pts, eps) if holds else None
    degenerate = holds and (witness is None or witness.is_degenerate(eps))
    return ConconicVerdict(residual=residual, holds=holds, witness_conic=witness, degenerate=degenerate)


def cotangent(lines: Sequence[HLine], eps: float = DEFAULT_EPS) -> ConconicVerdict:
    """Whether six pairwise-distinct lines all touch one conic.

    Works on the coefficient triples as points of the dual plane; when the
    verdict holds and the dual fit is nondegenerate, the witness is its
    adjugate, a conic tangent to all six lines.
    """
    ls = list(lines)
    if len(ls) != 6:
        raise ValueError("the cotangency test needs exactly six lines")
    _check_distinct(ls, eps, exc=DuplicateLines)
    residual, holds = veronese_residual([l.coords for l in ls], eps)
    witness = None
    degenerate = False
    if holds:
        dual_fit = _point_witness([HPoint(*l.coords) for l in ls], eps)
        if dual_fit is None or dual_fit.is_degenerate(eps):
            degenerate = True
        else:
            witness = Conic.from_matrix(adjugate3(dual_fit.gram))
    return ConconicVerdict(residual=residual, holds=holds, witness_conic=witness, degenerate=degenerate)


def conic_through_points(points: Sequence[HPoint], eps: float = DEFAULT_EPS) -> Conic:
    """The conic through five points in general position.

    Three collinear points force a degenerate (line-pair) result, which is
    returned as such.  Raises ``NonUniqueConic`` when the points admit a
    whole pencil of conics (four or more collinear) and ``DuplicatePoints``
    on repeats.
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError("a conic fit needs exactly five points")
    _check_distinct(pts, eps)
    rows = [veronese(p.coords) for p in pts]
    if not all(p.exact for p in pts):
        rows = [tuple(v / row_norm(row) for v in row) for row in rows]
    basis = nullspace(rows, 6, eps)
    if len(basis) != 1:
        raise NonUniqueConic(f"five points admit a {len(basis)}-dimensional family of conics")
    return Conic.from_coeffs(basis[0])


def conconic_by_fit(points: Sequence[HPoint], eps: float = DEFAULT_EPS) -> bool:
    """Six-point test by fitting a conic to five points and testing the sixth.

    An independent route to the same answer as ``conconic``; kept separate
    on purpose so the two implementations can cross-validate each other.
    """
    pts = list(points)
    if len(pts) != 6:
        raise ValueError("the conconicity test needs exactly six points")
    _check_distinct(pts, eps)
    last_error: Optional[Exception] = None
    for hold_out in range(6):
        five = [p for i, p in enumerate(pts) if i != hold_out]
        try:
            fitted = conic_through_points(five, eps)
        except NonUniqueConic as err:
            last_error = err
            continue
        return fitted.contains(pts[hold_out], eps)
    raise NonUniqueConic(
        "every five-point subset is degenerate; the six points lie on a pencil"
    ) from last_error


# ----- classical incidence cross-checks ----------------------------------


def pascal_collinear(points: Sequence[HPoint], eps: float = DEFAULT_EPS) -> bool:
    """Whether the three opposite-side meets of the hexagon are collinear.

    For a hexagon inscribed in a conic this always holds; on six generic
    points it fails, which makes it usable as an independent conconicity
    check.
    """
    pts = list(points)
    if len(pts) != 6:
        raise ValueError("a hexagon needs exactly six vertices")
    sides = [join(pts[i], pts[(i + 1) % 6], eps) for i in range(6)]
    meets = [meet(sides[i], sides[i + 3], eps) for i in range(3)]
    return collinear(meets, eps)


def brianchon_concurrent(lines: Sequence[HLine], eps: float = DEFAULT_EPS) -> bool:
    """Whether the three main diagonals of the hexagon of lines concur.

    For six tangents of one conic this always holds; it is the dual
    counterpart of the hexagon test on points.
    """
    ls = list(lines)
    if len(ls) != 6:
        raise ValueError("a hexagon needs exactly six sides")
    for i in range(len(ls)):
        for j in range(i + 1, len(ls)):
            if ls[i] == ls[j]:
                raise DuplicateLines(f"lines {i} and {j} coincide: {ls[i]}")
    vertices = [meet(ls[i], ls[(i + 1) % 6], eps) for i in range(6)]
    diagonals = [join(vertices[i], vertices[i + 3], eps) for i in range(3)]
    return concurrent(diagonals, eps)
