"""Cevian configurations and the four equivalent conconicity conditions.

A configuration is a triangle ABC with two triples of cevians AA1/BB1/CC1
and AA2/BB2/CC2, given by their feet on the opposite sides.  From those the
pairwise meets within each triple (X, Y, Z with index 1 and 2) and the
three cross meets

    U1 = BB1 x CC2,   V1 = CC1 x AA2,   W1 = AA1 x BB2

are derived.  The four condition predicates are

    outer6    -- the six feet lie on one conic,
    inner6    -- the six X/Y/Z points lie on one conic,
    tangent6  -- the six cevian lines touch one conic,
    concurrent -- AU1, BV1, CW1 pass through one point,

and in exact arithmetic they are provably equivalent; a disagreement of the
four booleans on exact input is a hard internal-consistency failure, never
a legitimate answer.

The module also provides the classical cevian generators (isogonal and
isotomic conjugation of feet, cevians through a common point), a solver
that completes five feet to a conconic sextuple, and the normalized chart
that reduces the concurrency condition to a one-parameter comparison
p = q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from .conics import (
    Conic,
    ConconicVerdict,
    conconic,
    conic_through_points,
    cotangent,
    veronese,
    veronese_residual,
)
from .errors import (
    ChartDegenerate,
    CoincidentCevians,
    CoincidentLines,
    DegenerateQuadruple,
    DegenerateTriangle,
    FootOffSide,
    IrrationalResult,
    NonUniqueConic,
    NoRealSolution,
    PointAtVertex,
    PointOnSide,
    SideOnConic,
    TheoremConsistencyError,
)
from .linalg import adjugate3, cross, det, row_norm
from .projective import (
    HLine,
    HPoint,
    coincident,
    collinear,
    concurrency,
    incident,
    join,
    map_from_correspondence,
    meet,
)
from .scalars import DEFAULT_EPS, Scalar, all_exact, div, exact_sqrt, near_zero

FeetTriple = Tuple[HPoint, HPoint, HPoint]

SIDES = ("BC", "CA", "AB")


@dataclass(frozen=True)
class Triangle:
    """Three non-collinear vertices."""

    A: HPoint
    B: HPoint
    C: HPoint

    def __post_init__(self):
        if collinear((self.A, self.B, self.C)):
            raise DegenerateTriangle("triangle vertices are collinear")

    @property
    def exact(self) -> bool:
        return self.A.exact and self.B.exact and self.C.exact

    @property
    def vertices(self) -> Tuple[HPoint, HPoint, HPoint]:
        return (self.A, self.B, self.C)

    @property
    def bc(self) -> HLine:
        return join(self.B, self.C)

    @property
    def ca(self) -> HLine:
        return join(self.C, self.A)

    @property
    def ab(self) -> HLine:
        return join(self.A, self.B)

    def side_line(self, side: str) -> HLine:
        return {"BC": self.bc, "CA": self.ca, "AB": self.ab}[side]

    def side_endpoints(self, side: str) -> Tuple[HPoint, HPoint]:
        return {
            "BC": (self.B, self.C),
            "CA": (self.C, self.A),
            "AB": (self.A, self.B),
        }[side]


@dataclass(frozen=True)
class CevianFeet:
    """Six cevian feet: A-feet on BC, B-feet on CA, C-feet on AB."""

    A1: HPoint
    A2: HPoint
    B1: HPoint
    B2: HPoint
    C1: HPoint
    C2: HPoint

    @classmethod
    def from_triples(cls, first: FeetTriple, second: FeetTriple) -> "CevianFeet":
        """Build from two (foot on BC, foot on CA, foot on AB) triples."""
        return cls(
            A1=first[0], A2=second[0],
            B1=first[1], B2=second[1],
            C1=first[2], C2=second[2],
        )

    @property
    def outer(self) -> Tuple[HPoint, ...]:
        return (self.A1, self.A2, self.B1, self.B2, self.C1, self.C2)

    def triple(self, which: int) -> FeetTriple:
        if which == 1:
            return (self.A1, self.B1, self.C1)
        if which == 2:
            return (self.A2, self.B2, self.C2)
        raise ValueError("triple index must be 1 or 2")


@dataclass(frozen=True)
class CevianConfig:
    """A triangle, six feet, and all nine derived intersection points."""

    triangle: Triangle
    feet: CevianFeet
    X1: HPoint
    Y1: HPoint
    Z1: HPoint
    X2: HPoint
    Y2: HPoint
    Z2: HPoint
    U1: HPoint
    V1: HPoint
    W1: HPoint

    @property
    def exact(self) -> bool:
        return self.triangle.exact and all(p.exact for p in self.feet.outer)

    def cevian_lines(self, which: int) -> Tuple[HLine, HLine, HLine]:
        """The cevians AA_i, BB_i, CC_i of one triple."""
        tri = self.triangle
        a_foot, b_foot, c_foot = self.feet.triple(which)
        return (join(tri.A, a_foot), join(tri.B, b_foot), join(tri.C, c_foot))

    @property
    def inner_points(self) -> Tuple[HPoint, ...]:
        return (self.X1, self.X2, self.Y1, self.Y2, self.Z1, self.Z2)


def validate_feet(tri: Triangle, feet: CevianFeet, eps: float = DEFAULT_EPS) -> None:
    """Check every foot sits on its side line and away from the vertices."""
    sides = {
        "A1": "BC", "A2": "BC",
        "B1": "CA", "B2": "CA",
        "C1": "AB", "C2": "AB",
    }
    for name, side in sides.items():
        foot = getattr(feet, name)
        if not incident(foot, tri.side_line(side), eps):
            raise FootOffSide(f"foot {name} does not lie on side {side}")
        for vertex, vname in zip(tri.vertices, "ABC"):
            if coincident(foot, vertex, eps):
                raise FootOffSide(f"foot {name} coincides with vertex {vname}")


def _cevian_meet(l: HLine, m: HLine, label: str, eps: float) -> HPoint:
    try:
        return meet(l, m, eps)
    except CoincidentLines:
        raise CoincidentCevians(f"cevians defining {label} coincide") from None


def build_config(tri: Triangle, feet: CevianFeet, eps: float = DEFAULT_EPS) -> CevianConfig:
    """Derive the full configuration from a triangle and validated feet."""
    validate_feet(tri, feet, eps)
    aa1 = join(tri.A, feet.A1)
    bb1 = join(tri.B, feet.B1)
    cc1 = join(tri.C, feet.C1)
    aa2 = join(tri.A, feet.A2)
    bb2 = join(tri.B, feet.B2)
    cc2 = join(tri.C, feet.C2)
    return CevianConfig(
        triangle=tri,
        feet=feet,
        X1=_cevian_meet(bb1, cc1, "X1", eps),
        Y1=_cevian_meet(aa1, cc1, "Y1", eps),
        Z1=_cevian_meet(aa1, bb1, "Z1", eps),
        X2=_cevian_meet(bb2, cc2, "X2", eps),
        Y2=_cevian_meet(aa2, cc2, "Y2", eps),
        Z2=_cevian_meet(aa2, bb2, "Z2", eps),
        U1=_cevian_meet(bb1, cc2, "U1", eps),
        V1=_cevian_meet(cc1, aa2, "V1", eps),
        W1=_cevian_meet(aa1, bb2, "W1", eps),
    )


# ----- the four condition predicates --------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    """The four condition verdicts for one configuration."""

    outer6: ConconicVerdict
    inner6: ConconicVerdict
    tangent6: ConconicVerdict
    concurrent: ConconicVerdict

    @property
    def booleans(self) -> Tuple[bool, bool, bool, bool]:
        return (
            self.outer6.holds,
            self.inner6.holds,
            self.tangent6.holds,
            self.concurrent.holds,
        )

    @property
    def agree(self) -> bool:
        return len(set(self.booleans)) == 1

    @property
    def all_hold(self) -> bool:
        return all(self.booleans)


def _dedupe(items: Sequence, eps: float) -> list:
    kept = []
    for item in items:
        if not any(coincident(item, seen, eps) for seen in kept):
            kept.append(item)
    return kept


def _small_witness(distinct: Sequence[HPoint], eps: float) -> Optional[Conic]:
    """A degenerate conic through at most four distinct points."""
    if len(distinct) < 2:
        return None
    if collinear(distinct, eps):
        return Conic.from_double_line(join(distinct[0], distinct[1], eps))
    if len(distinct) == 3:
        return Conic.from_line_pair(
            join(distinct[0], distinct[1], eps), join(distinct[0], distinct[2], eps)
        )
    return Conic.from_line_pair(
        join(distinct[0], distinct[1], eps), join(distinct[2], distinct[3], eps)
    )


def _tolerant_conconic(points: Sequence[HPoint], eps: float) -> ConconicVerdict:
    """Six-point verdict that allows coincident points.

    Repeated points make the Veronese determinant vanish identically, so
    the verdict holds with a degenerate witness: the natural example is the
    two-triple configuration through two fixed points, where all six inner
    points collapse onto two and the witness is the doubly covered line
    through them.
    """
    distinct = _dedupe(points, eps)
    if len(distinct) == 6:
        return conconic(points, eps)
    residual, _ = veronese_residual([p.coords for p in points], eps)
    if len(distinct) == 5:
        try:
            witness = conic_through_points(distinct, eps)
        except NonUniqueConic:
            witness = None
    else:
        witness = _small_witness(distinct, eps)
    degenerate = witness is None or witness.is_degenerate(eps)
    return ConconicVerdict(residual=residual, holds=True, witness_conic=witness, degenerate=degenerate)


def _tolerant_cotangent(lines: Sequence[HLine], eps: float) -> ConconicVerdict:
    """Six-line verdict that allows coincident lines (shared cevians)."""
    distinct = _dedupe(lines, eps)
    if len(distinct) == 6:
        return cotangent(lines, eps)
    residual, _ = veronese_residual([l.coords for l in lines], eps)
    dual_points = [HPoint(*l.coords) for l in distinct]
    dual_fit = None
    if len(dual_points) == 5:
        try:
            dual_fit = conic_through_points(dual_points, eps)
        except NonUniqueConic:
            dual_fit = None
    witness = None
    degenerate = True
    if dual_fit is not None and not dual_fit.is_degenerate(eps):
        witness = Conic.from_matrix(adjugate3(dual_fit.gram))
        degenerate = False
    return ConconicVerdict(residual=residual, holds=True, witness_conic=witness, degenerate=degenerate)


def check_conditions(cfg: CevianConfig, eps: float = DEFAULT_EPS) -> ConditionReport:
    """Evaluate the four equivalent conditions on one configuration.

    On exact input with all six feet, inner points, and cevian lines
    pairwise distinct, the four booleans must agree; a disagreement there
    means the implementation itself is broken and raises
    ``TheoremConsistencyError`` rather than returning an untrustworthy
    report.  When points or lines coincide (e.g. a triple of concurrent
    cevians collapses its inner points, or both triples pass through fixed
    points) some conditions become trivially true while others can still
    fail; the equivalence does not apply to such collapsed inputs, so the
    verdicts are reported as computed without the consistency assertion.
    """
    tri = cfg.triangle
    lines = cfg.cevian_lines(1) + cfg.cevian_lines(2)
    outer6 = _tolerant_conconic(cfg.feet.outer, eps)
    inner6 = _tolerant_conconic(cfg.inner_points, eps)
    tangent6 = _tolerant_cotangent(lines, eps)
    cv = concurrency(join(tri.A, cfg.U1), join(tri.B, cfg.V1), join(tri.C, cfg.W1), eps)
    concurrent_verdict = ConconicVerdict(residual=cv.residual, holds=cv.holds)
    report = ConditionReport(
        outer6=outer6,
        inner6=inner6,
        tangent6=tangent6,
        concurrent=concurrent_verdict,
    )
    duplicate_free = (
        len(_dedupe(cfg.feet.outer, eps)) == 6
        and len(_dedupe(cfg.inner_points, eps)) == 6
        and len(_dedupe(lines, eps)) == 6
    )
    if cfg.exact and duplicate_free and not report.agree:
        raise TheoremConsistencyError(
            f"the four equivalent conditions disagree on exact input: {report.booleans}",
            verdicts=report,
        )
    return report


# ----- conjugate feet generators ------------------------------------------


def _affine_triple(p: HPoint, what: str) -> Tuple[Scalar, Scalar, Scalar]:
    if p.at_infinity:
        raise ValueError(f"{what} must be a finite point")
    x, y = p.to_xy()
    return (x, y, 1 if p.exact else 1.0)


def _side_weights(foot: HPoint, p: Tuple, q: Tuple) -> Tuple[Scalar, Scalar]:
    """Weights (y, z) with foot = y*p + z*q for affine-normalized p, q."""
    n = cross(p, q)
    pivot = max(range(3), key=lambda i: abs(float(n[i])))
    y = div(cross(foot.coords, q)[pivot], n[pivot])
    z = div(cross(p, foot.coords)[pivot], n[pivot])
    return y, z


def _combine(w1: Scalar, p: Tuple, w2: Scalar, q: Tuple) -> HPoint:
    return HPoint(*(w1 * a + w2 * b for a, b in zip(p, q)))


def _squared_side_lengths(tri: Triangle) -> Tuple[Scalar, Scalar, Scalar]:
    a = _affine_triple(tri.A, "triangle vertex")
    b = _affine_triple(tri.B, "triangle vertex")
    c = _affine_triple(tri.C, "triangle vertex")

    def sq(u, v):
        return (u[0] - v[0]) ** 2 + (u[1] - v[1]) ** 2

    return sq(b, c), sq(c, a), sq(a, b)


def _validate_triple(tri: Triangle, triple: FeetTriple, eps: float) -> None:
    for foot, side in zip(triple, SIDES):
        if not incident(foot, tri.side_line(side), eps):
            raise FootOffSide(f"foot does not lie on side {side}")
        for vertex, vname in zip(tri.vertices, "ABC"):
            if coincident(foot, vertex, eps):
                raise FootOffSide(f"foot on {side} coincides with vertex {vname}")


def isogonal_feet(tri: Triangle, triple: FeetTriple, eps: float = DEFAULT_EPS) -> FeetTriple:
    """Feet of the cevians obtained by reflecting each cevian across the
    angle bisector at its vertex.

    Computed by the rational rule on barycentric side weights: on BC the
    weights (y : z) map to (b2*z : c2*y) where a2, b2, c2 are the squared
    side lengths, and cyclically on the other sides.  This keeps exact
    inputs exact; the equivalent metric description (reflect the cevian
    direction across the bisector direction) needs square roots.
    """
    _validate_triple(tri, triple, eps)
    a2, b2, c2 = _squared_side_lengths(tri)
    av = _affine_triple(tri.A, "triangle vertex")
    bv = _affine_triple(tri.B, "triangle vertex")
    cv = _affine_triple(tri.C, "triangle vertex")
    fa, fb, fc = triple
    y, z = _side_weights(fa, bv, cv)      # foot on BC: (0 : y : z)
    out_a = _combine(b2 * z, bv, c2 * y, cv)
    x, z = _side_weights(fb, av, cv)      # foot on CA: (x : 0 : z)
    out_b = _combine(a2 * z, av, c2 * x, cv)
    x, y = _side_weights(fc, av, bv)      # foot on AB: (x : y : 0)
    out_c = _combine(a2 * y, av, b2 * x, bv)
    return (out_a, out_b, out_c)


def isotomic_feet(tri: Triangle, triple: FeetTriple, eps: float = DEFAULT_EPS) -> FeetTriple:
    """Feet reflected across the midpoint of their side (weights swapped)."""
    _validate_triple(tri, triple, eps)
    av = _affine_triple(tri.A, "triangle vertex")
    bv = _affine_triple(tri.B, "triangle vertex")
    cv = _affine_triple(tri.C, "triangle vertex")
    fa, fb, fc = triple
    y, z = _side_weights(fa, bv, cv)
    out_a = _combine(z, bv, y, cv)
    x, z = _side_weights(fb, av, cv)
    out_b = _combine(z, av, x, cv)
    x, y = _side_weights(fc, av, bv)
    out_c = _combine(y, av, x, bv)
    return (out_a, out_b, out_c)


def cevians_through_point(tri: Triangle, p: HPoint, eps: float = DEFAULT_EPS) -> FeetTriple:
    """Feet of the three cevians through one common point."""
    for vertex, vname in zip(tri.vertices, "ABC"):
        if coincident(p, vertex, eps):
            raise PointAtVertex(f"point coincides with vertex {vname}")
    for side in SIDES:
        if incident(p, tri.side_line(side), eps):
            raise PointOnSide(f"point lies on side line {side}")
    return (
        meet(join(tri.A, p, eps), tri.bc, eps),
        meet(join(tri.B, p, eps), tri.ca, eps),
        meet(join(tri.C, p, eps), tri.ab, eps),
    )


# ----- completing five feet to a conconic sextuple -------------------------


def _quadratic_real_roots(a: Scalar, b: Scalar, c: Scalar, eps: float):
    """Real roots of a*t^2 + b*t + c, honoring the arithmetic backend."""
    if all_exact((a, b, c)):
        if a == 0:
            if b == 0:
                raise NoRealSolution("determinant has no root on this side")
            return [div(-c, b)]
        disc = b * b - 4 * a * c
        if disc < 0:
            raise NoRealSolution("determinant has no real root on this side")
        root = exact_sqrt(disc)
        if root is None:
            raise IrrationalResult(
                "roots exist but are irrational; rerun with float coordinates"
            )
        return sorted({div(-b + root, 2 * a), div(-b - root, 2 * a)})
    fa, fb, fc = float(a), float(b), float(c)
    scale = max(abs(fa), abs(fb), abs(fc))
    if near_zero(fa, scale, eps):
        if near_zero(fb, scale, eps):
            raise NoRealSolution("determinant has no root on this side")
        return [-fc / fb]
    disc = fb * fb - 4.0 * fa * fc
    if near_zero(disc, max(fb * fb, abs(4.0 * fa * fc)), eps):
        return [-fb / (2.0 * fa)]
    if disc < 0:
        raise NoRealSolution("determinant has no real root on this side")
    root = math.sqrt(disc)
    q = -(fb + math.copysign(root, fb)) / 2.0
    return sorted({q / fa, fc / q})


def solve_sixth_foot(
    tri: Triangle,
    five_feet: Sequence[HPoint],
    side: str,
    eps: float = DEFAULT_EPS,
) -> Tuple[HPoint, ...]:
    """Feet on ``side`` completing five feet to a conconic sextuple.

    The unknown foot is parametrized affinely along the side, which makes
    the six-point Veronese determinant a quadratic polynomial in the
    parameter; its real roots (excluding the side's endpoints, which are
    not valid feet) are returned.  ``SideOnConic`` means the determinant
    vanishes identically: the five feet already force a degenerate conic
    containing the whole side, so every foot works.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if len(five_feet) != 5:
        raise ValueError("exactly five fixed feet are required")
    v1, v2 = tri.side_endpoints(side)
    p = _affine_triple(v1, "side endpoint")
    q = _affine_triple(v2, "side endpoint")
    fixed_rows = [list(veronese(f.coords)) for f in five_feet]

    def det_at(t: Scalar) -> Scalar:
        moving = tuple(a + t * (b - a) for a, b in zip(p, q))
        return det(fixed_rows + [list(veronese(moving))])

    d0, d1, d2 = det_at(0), det_at(1), det_at(2)
    # quadratic through the three samples: c + b t + a t^2
    c = d0
    a = div(d2 - 2 * d1 + d0, 2)
    b = d1 - d0 - a
    exact = all_exact((a, b, c))
    if exact:
        identically_zero = a == 0 and b == 0 and c == 0
    else:
        scale = max(abs(float(d0)), abs(float(d1)), abs(float(d2)))
        identically_zero = all(near_zero(float(v), scale, eps) for v in (a, b, c))
    if identically_zero:
        raise SideOnConic(
            f"five feet already force a conic containing side {side}; "
            "every foot satisfies the determinant"
        )
    roots = _quadratic_real_roots(a, b, c, eps)
    feet = []
    for t in roots:
        if t == 0 or t == 1:
            continue  # the root sits on a vertex, which is not a valid foot
        feet.append(HPoint(*(u + t * (v - u) for u, v in zip(p, q))))
    return tuple(feet)


# ----- the normalized chart ------------------------------------------------


@dataclass(frozen=True)
class ProofChart:
    """Coordinates of the configuration in the normalized chart.

    The chart sends B and C to infinity (so both cevian triples become
    pairs of parallel line families), puts A at the origin, and scales the
    axes so the images of C1 and B2 land at (0, 1) and (1, 0).  Then

        image of B1 = (b1, 0),  image of C2 = (0, c2),
        image of U1 = (b1, c2), image of V1 = (b1/p, 1),
        image of W1 = (1, c2/q),

    and the concurrency condition holds exactly when p = q.  ``p`` or ``q``
    is None when the corresponding auxiliary point is at infinity in the
    chart; that situation is reported, not treated as an error.
    """

    b1: Scalar
    c2: Scalar
    p: Optional[Scalar]
    q: Optional[Scalar]

    @property
    def degenerate(self) -> bool:
        return self.p is None or self.q is None

    @property
    def criterion(self) -> bool:
        """The chart form of the concurrency condition."""
        return self.p == self.q


def to_chart(cfg: CevianConfig, eps: float = DEFAULT_EPS) -> ProofChart:
    """Normalized-chart coordinates (b1, c2, p, q) of a configuration."""
    tri = cfg.triangle
    feet = cfg.feet
    dst = (HPoint(0, 1, 0), HPoint(1, 0, 0), HPoint(0, 1, 1), HPoint(1, 0, 1))
    try:
        chart_map = map_from_correspondence((tri.B, tri.C, feet.C1, feet.B2), dst, eps)
    except DegenerateQuadruple as err:
        raise ChartDegenerate(f"chart frame cannot be built: {err}") from None

    def affine(img: HPoint) -> Optional[Tuple[Scalar, Scalar]]:
        x, y, z = img.coords
        if z == 0 or (not img.exact and near_zero(z, row_norm(img.coords), eps)):
            return None
        return div(x, z), div(y, z)

    b1_pt = affine(chart_map.apply(feet.B1))
    c2_pt = affine(chart_map.apply(feet.C2))
    if b1_pt is None or c2_pt is None:
        raise ChartDegenerate("a normalized foot escaped to infinity in the chart")
    b1 = b1_pt[0]
    c2 = c2_pt[1]

    ab, ca = tri.ab, tri.ca
    p_pt = affine(chart_map.apply(meet(ab, join(feet.A2, feet.B1, eps), eps)))
    q_pt = affine(chart_map.apply(meet(ca, join(feet.A1, feet.C2, eps), eps)))
    p = None if p_pt is None else -p_pt[1]
    q = None if q_pt is None else -q_pt[0]
    return ProofChart(b1=b1, c2=c2, p=p, q=q)
