"""Deterministic SVG rendering of configurations, conics, and chains.

The output is a pure function of the geometric input: fixed palette,
fixed decimal formatting, no timestamps, so rendering the same scene
twice yields byte-identical files.  The drawing frame is the triangle's
bounding box (or the chain's) padded by 15 percent; conics are drawn as
closed 256-gon polylines sampled through the rational parametrization at
a point of the conic, and infinite lines are clipped to the frame.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from .cevians import CevianConfig, Triangle
from .conics import Conic
from .errors import GeometryError
from .poncelet import ChainResult, find_point_on_conic, sample_on_conic
from .projective import HLine, HPoint

CONIC_SAMPLES = 256
MARGIN = 0.15

_TRIANGLE_COLOR = "#1f3a5f"
_CEVIAN_FIRST = "#c0392b"
_CEVIAN_SECOND = "#2980b9"
_POINT_COLOR = "#111111"
_INNER_COLOR = "#8e44ad"
_CONIC_COLORS = ("#27ae60", "#e67e22", "#16a085")
_CHAIN_COLOR = "#c0392b"


def _affine(p: HPoint) -> Optional[Tuple[float, float]]:
    x, y, z = (float(v) for v in p.coords)
    if z == 0.0 or abs(z) < 1e-14 * max(abs(x), abs(y)):
        return None
    return (x / z, y / z)


class Frame:
    """Affine window plus y-flip mapping geometry into SVG user units."""

    def __init__(self, xs: Sequence[float], ys: Sequence[float]):
        xmin, xmax = min(xs), max(xs)
        ymin, ymax = min(ys), max(ys)
        span = max(xmax - xmin, ymax - ymin, 1e-9)
        pad = MARGIN * span
        self.xmin, self.xmax = xmin - pad, xmax + pad
        self.ymin, self.ymax = ymin - pad, ymax + pad
        self.width = self.xmax - self.xmin
        self.height = self.ymax - self.ymin
        self.stroke = 0.008 * max(self.width, self.height)
        self.radius = 0.012 * max(self.width, self.height)

    def to_svg(self, x: float, y: float) -> Tuple[float, float]:
        return (x, self.ymin + self.ymax - y)  # flip y so up is up

    def viewbox(self) -> str:
        return f"{_fmt(self.xmin)} {_fmt(self.ymin)} {_fmt(self.width)} {_fmt(self.height)}"

    def contains(self, x: float, y: float, slack: float = 0.0) -> bool:
        return (
            self.xmin - slack <= x <= self.xmax + slack
            and self.ymin - slack <= y <= self.ymax + slack
        )


def _fmt(v: float) -> str:
    out = f"{v:.4f}"
    return "0.0000" if out == "-0.0000" else out


def _polyline(frame: Frame, pts: Sequence[Tuple[float, float]], color: str, width_scale: float = 1.0, closed: bool = False) -> str:
    mapped = [frame.to_svg(x, y) for x, y in pts]
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in mapped)
    tag = "polygon" if closed else "polyline"
    return (
        f'<{tag} points="{coords}" fill="none" stroke="{color}" '
        f'stroke-width="{_fmt(width_scale * frame.stroke)}" />'
    )


def _segment(frame: Frame, a: Tuple[float, float], b: Tuple[float, float], color: str, width_scale: float = 1.0, dashed: bool = False) -> str:
    (x1, y1), (x2, y2) = frame.to_svg(*a), frame.to_svg(*b)
    dash = f' stroke-dasharray="{_fmt(3 * frame.stroke)},{_fmt(2 * frame.stroke)}"' if dashed else ""
    return (
        f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
        f'stroke="{color}" stroke-width="{_fmt(width_scale * frame.stroke)}"{dash} />'
    )


def _dot(frame: Frame, p: Tuple[float, float], color: str, radius_scale: float = 1.0) -> str:
    x, y = frame.to_svg(*p)
    return f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(radius_scale * frame.radius)}" fill="{color}" />'


def _document(frame: Frame, body: List[str]) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{frame.viewbox()}" '
        f'width="640" height="{_fmt(640 * frame.height / frame.width)}">',
        f'<rect x="{_fmt(frame.xmin)}" y="{_fmt(frame.ymin)}" width="{_fmt(frame.width)}" '
        f'height="{_fmt(frame.height)}" fill="#fdfdf8" />',
    ]
    lines.extend(body)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _clip_line(frame: Frame, line: HLine) -> Optional[Tuple[Tuple[float, float], Tuple[float, float]]]:
    """Visible segment of an infinite line inside the frame, if any."""
    a, b, c = (float(v) for v in line.coords)
    hits: List[Tuple[float, float]] = []
    if b != 0.0:
        for x in (frame.xmin, frame.xmax):
            y = -(a * x + c) / b
            if frame.ymin - 1e-9 <= y <= frame.ymax + 1e-9:
                hits.append((x, y))
    if a != 0.0:
        for y in (frame.ymin, frame.ymax):
            x = -(b * y + c) / a
            if frame.xmin - 1e-9 <= x <= frame.xmax + 1e-9:
                hits.append((x, y))
    uniq: List[Tuple[float, float]] = []
    for h in hits:
        if all(math.dist(h, u) > 1e-9 * max(frame.width, frame.height) for u in uniq):
            uniq.append(h)
    if len(uniq) < 2:
        return None
    uniq.sort()
    return uniq[0], uniq[-1]


def conic_polyline_points(conic: Conic, eps: float = 1e-9) -> List[Tuple[float, float]]:
    """Sample points along a nondegenerate conic for drawing."""
    base = find_point_on_conic(conic, eps)
    pts: List[Tuple[float, float]] = []
    for k in range(CONIC_SAMPLES):
        theta = -math.pi + 2.0 * math.pi * (k + 0.5) / CONIC_SAMPLES
        sample = sample_on_conic(conic, base, math.tan(theta / 2.0), eps)
        xy = _affine(sample)
        if xy is not None:
            pts.append(xy)
    return pts


def _draw_conic(frame: Frame, conic: Conic, color: str, eps: float) -> List[str]:
    kind = conic.classify(eps)
    if kind == "nondegenerate":
        try:
            pts = conic_polyline_points(conic, eps)
        except GeometryError:
            return []
        visible = [p for p in pts if frame.contains(*p, slack=2 * max(frame.width, frame.height))]
        if len(visible) < 2:
            return []
        return [_polyline(frame, visible, color, closed=len(visible) == CONIC_SAMPLES)]
    # degenerate witnesses are one or two lines through the frame
    body = []
    try:
        lines = _component_lines(conic, eps)
    except GeometryError:
        return []
    for ln in lines:
        seg = _clip_line(frame, ln)
        if seg is not None:
            body.append(_segment(frame, seg[0], seg[1], color, dashed=True))
    return body


def _component_lines(conic: Conic, eps: float) -> List[HLine]:
    """The line(s) making up a rank-deficient conic."""
    from .conics import intersect_line
    from .linalg import adjugate3, matvec3, row_norm

    gram = conic.gram
    rank = conic.rank(eps)
    if rank == 1:
        rows = sorted(gram, key=row_norm, reverse=True)
        return [HLine(*rows[0])]
    if rank != 2:
        return []
    # a line pair's singular point is in the kernel; pair = lines joining it
    # to the two intersections with any line avoiding the singular point
    adj = adjugate3(gram)
    candidates = sorted(
        (tuple(row) for row in adj), key=row_norm, reverse=True
    )
    # rank-2 adjugate has rank 1; its rows are multiples of the singular point
    singular = candidates[0]
    probes = (HLine(1, 0, 0), HLine(0, 1, 0), HLine(0, 0, 1), HLine(1, 1, 1))
    from .projective import incident, join

    for probe in probes:
        if incident(HPoint(*singular), probe):
            continue
        pts = intersect_line(conic, probe, eps)
        return [join(HPoint(*singular), p) for p in pts]
    return []


def render_configuration(
    cfg: CevianConfig,
    witnesses: Sequence[Optional[Conic]] = (),
    eps: float = 1e-9,
) -> str:
    """SVG of a cevian configuration with optional witness conics."""
    tri = cfg.triangle
    corners = [xy for xy in (_affine(v) for v in tri.vertices) if xy is not None]
    frame = Frame([x for x, _ in corners], [y for _, y in corners])
    body: List[str] = []
    body.append(_polyline(frame, corners, _TRIANGLE_COLOR, width_scale=1.4, closed=True))

    verts = (tri.A, tri.B, tri.C)
    for which, color in ((1, _CEVIAN_FIRST), (2, _CEVIAN_SECOND)):
        for vertex, foot in zip(verts, cfg.feet.triple(which)):
            a, b = _affine(vertex), _affine(foot)
            if a is not None and b is not None:
                body.append(_segment(frame, a, b, color, width_scale=0.8))

    for i, conic in enumerate(w for w in witnesses if w is not None):
        body.extend(_draw_conic(frame, conic, _CONIC_COLORS[i % len(_CONIC_COLORS)], eps))

    for p in cfg.feet.outer:
        xy = _affine(p)
        if xy is not None:
            body.append(_dot(frame, xy, _POINT_COLOR, radius_scale=0.8))
    for p in cfg.inner_points:
        xy = _affine(p)
        if xy is not None and frame.contains(*xy):
            body.append(_dot(frame, xy, _INNER_COLOR, radius_scale=0.8))
    for v in verts:
        xy = _affine(v)
        if xy is not None:
            body.append(_dot(frame, xy, _TRIANGLE_COLOR))
    return _document(frame, body)


def render_chain(c1: Conic, c2: Conic, chain: ChainResult, eps: float = 1e-9) -> str:
    """SVG of two conics and a chain polygon between them."""
    pts = [xy for xy in (_affine(p) for p in chain.points) if xy is not None]
    conic_pts = []
    for conic in (c1, c2):
        try:
            conic_pts.extend(conic_polyline_points(conic, eps))
        except GeometryError:
            pass
    xs = [x for x, _ in pts + conic_pts] or [0.0, 1.0]
    ys = [y for _, y in pts + conic_pts] or [0.0, 1.0]
    frame = Frame(xs, ys)
    body: List[str] = []
    for i, conic in enumerate((c1, c2)):
        body.extend(_draw_conic(frame, conic, _CONIC_COLORS[i % len(_CONIC_COLORS)], eps))
    if len(pts) >= 2:
        body.append(_polyline(frame, pts, _CHAIN_COLOR, width_scale=1.2, closed=chain.closed))
    for xy in pts:
        body.append(_dot(frame, xy, _POINT_COLOR, radius_scale=0.9))
    return _document(frame, body)


def render_morley(data, eps: float = 1e-9) -> str:
    """SVG of the trisector configuration with its two conics."""
    body_svg = render_configuration(
        data.config, witnesses=(data.inner_conic, data.cevian_conic), eps=eps
    )
    # append the equilateral triangle on top, inside the closing tag
    tri_pts = [xy for xy in (_affine(p) for p in data.morley_triangle) if xy is not None]
    corners = [xy for xy in (_affine(v) for v in data.triangle.vertices) if xy is not None]
    frame = Frame([x for x, _ in corners], [y for _, y in corners])
    extra = _polyline(frame, tri_pts, _INNER_COLOR, width_scale=1.2, closed=True)
    return body_svg.replace("</svg>", extra + "\n</svg>")
