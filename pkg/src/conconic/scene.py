"""Scene and report wire format for the verification pipeline.

A scene declares a triangle and six cevian feet; feet are given either as
six side parameters in the order (a1, b1, c1, a2, b2, c2) — the foot on a
side with endpoints (P, Q) at parameter t is P + t (Q - P) — or through a
named generator (``isogonal``, ``isotomic``, ``through_points``).

Exact values travel as strings ("3/4", "0.25", "-2"); floats travel as
JSON numbers.  In rational mode every value is parsed exactly and a report
serialized and re-parsed compares equal field by field, so the format is
lossless.  Conic coefficients on the wire are always in the monomial
order (x^2, xy, y^2, xz, yz, z^2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence, Tuple

from .cevians import (
    SIDES,
    CevianFeet,
    ConditionReport,
    CevianConfig,
    Triangle,
    build_config,
    cevians_through_point,
    check_conditions,
    isogonal_feet,
    isotomic_feet,
    to_chart,
    validate_feet,
)
from .errors import ChartDegenerate
from .generate import feet_from_params, foot_point
from .projective import HPoint
from .scalars import DEFAULT_CLOSURE_TOL, DEFAULT_EPS, Scalar, format_scalar

MODES = ("rational", "float")
GENERATORS = ("isogonal", "isotomic", "through_points")
CONDITION_NAMES = ("outer6", "inner6", "tangent6", "concurrent")


class SceneError(ValueError):
    """A scene file does not conform to the expected schema."""


# ----- scalar encoding ------------------------------------------------------


def encode_value(x: Scalar):
    """Exact scalars become "p/q" strings; floats stay JSON numbers."""
    if isinstance(x, float):
        return x
    return format_scalar(x)


def decode_value(v: Any, exact: bool) -> Scalar:
    """Parse a wire value into the requested arithmetic backend."""
    if isinstance(v, bool):
        raise SceneError(f"expected a number, got {v!r}")
    if isinstance(v, str):
        try:
            value = Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise SceneError(f"cannot parse {v!r} as a rational value") from err
        return value if exact else float(value)
    if isinstance(v, int):
        return Fraction(v) if exact else float(v)
    if isinstance(v, float):
        if exact:
            raise SceneError(
                f"rational mode requires exact values as strings, got the float {v!r}"
            )
        return v
    raise SceneError(f"expected a number or string, got {type(v).__name__}")


def _decode_pair(pair: Any, exact: bool, what: str) -> Tuple[Scalar, Scalar]:
    if not isinstance(pair, Sequence) or isinstance(pair, str) or len(pair) != 2:
        raise SceneError(f"{what} must be a pair of coordinates")
    return (decode_value(pair[0], exact), decode_value(pair[1], exact))


# ----- scenes ---------------------------------------------------------------


@dataclass(frozen=True)
class Scene:
    """Declarative verification input: a triangle plus a feet prescription."""

    mode: str
    triangle: Tuple[Tuple[Scalar, Scalar], ...]
    feet_params: Optional[Tuple[Scalar, ...]] = None
    generator: Optional[str] = None
    generator_params: Optional[Tuple[Scalar, ...]] = None
    generator_points: Optional[Tuple[Tuple[Scalar, Scalar], ...]] = None
    epsilon: float = DEFAULT_EPS
    closure_tol: float = DEFAULT_CLOSURE_TOL

    @property
    def exact(self) -> bool:
        return self.mode == "rational"


def scene_from_dict(data: Dict[str, Any]) -> Scene:
    if not isinstance(data, dict):
        raise SceneError("a scene must be a JSON object")
    unknown = set(data) - {"triangle", "mode", "feet", "epsilon", "closure_tol"}
    if unknown:
        raise SceneError(f"unknown scene fields: {sorted(unknown)}")
    mode = data.get("mode", "rational")
    if mode not in MODES:
        raise SceneError(f"mode must be one of {MODES}, got {mode!r}")
    exact = mode == "rational"

    triangle_raw = data.get("triangle")
    if not isinstance(triangle_raw, Sequence) or len(triangle_raw) != 3:
        raise SceneError("triangle must list exactly three vertices")
    triangle = tuple(
        _decode_pair(pair, exact, f"vertex {i}") for i, pair in enumerate(triangle_raw)
    )

    feet = data.get("feet")
    if not isinstance(feet, dict):
        raise SceneError("feet must be an object with params or a generator")
    params = generator = gen_params = gen_points = None
    if "generator" in feet:
        generator = feet["generator"]
        if generator not in GENERATORS:
            raise SceneError(f"generator must be one of {GENERATORS}, got {generator!r}")
        if generator == "through_points":
            pts = feet.get("points")
            if not isinstance(pts, Sequence) or len(pts) != 2:
                raise SceneError("through_points needs exactly two points")
            gen_points = tuple(
                _decode_pair(p, exact, f"generator point {i}") for i, p in enumerate(pts)
            )
        else:
            raw = feet.get("params")
            if not isinstance(raw, Sequence) or len(raw) != 3:
                raise SceneError(f"{generator} needs exactly three side parameters")
            gen_params = tuple(decode_value(v, exact) for v in raw)
    elif "params" in feet:
        raw = feet["params"]
        if not isinstance(raw, Sequence) or len(raw) != 6:
            raise SceneError("feet params must list exactly six side parameters")
        params = tuple(decode_value(v, exact) for v in raw)
    else:
        raise SceneError("feet must carry either params or a generator")

    epsilon = float(data.get("epsilon", DEFAULT_EPS))
    closure_tol = float(data.get("closure_tol", DEFAULT_CLOSURE_TOL))
    if epsilon <= 0 or closure_tol <= 0:
        raise SceneError("tolerances must be positive")
    return Scene(
        mode=mode,
        triangle=triangle,
        feet_params=params,
        generator=generator,
        generator_params=gen_params,
        generator_points=gen_points,
        epsilon=epsilon,
        closure_tol=closure_tol,
    )


def scene_to_dict(scene: Scene) -> Dict[str, Any]:
    feet: Dict[str, Any]
    if scene.generator == "through_points":
        feet = {
            "generator": scene.generator,
            "points": [[encode_value(x), encode_value(y)] for x, y in scene.generator_points],
        }
    elif scene.generator is not None:
        feet = {
            "generator": scene.generator,
            "params": [encode_value(v) for v in scene.generator_params],
        }
    else:
        feet = {"params": [encode_value(v) for v in scene.feet_params]}
    return {
        "mode": scene.mode,
        "triangle": [[encode_value(x), encode_value(y)] for x, y in scene.triangle],
        "feet": feet,
        "epsilon": scene.epsilon,
        "closure_tol": scene.closure_tol,
    }


def load_scene(path: str) -> Scene:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as err:
            raise SceneError(f"{path} is not valid JSON: {err}") from err
    return scene_from_dict(data)


def scene_instance(scene: Scene) -> Tuple[Triangle, CevianFeet]:
    """Materialize the triangle and the six feet a scene describes."""
    tri = Triangle(*(HPoint(x, y, 1) for x, y in scene.triangle))
    if scene.generator == "through_points":
        p1, p2 = (HPoint(x, y, 1) for x, y in scene.generator_points)
        feet = CevianFeet.from_triples(
            cevians_through_point(tri, p1, scene.epsilon),
            cevians_through_point(tri, p2, scene.epsilon),
        )
    elif scene.generator is not None:
        conjugate = {"isogonal": isogonal_feet, "isotomic": isotomic_feet}[scene.generator]
        first = tuple(
            foot_point(tri, side, t) for side, t in zip(SIDES, scene.generator_params)
        )
        feet = CevianFeet.from_triples(first, conjugate(tri, first, scene.epsilon))
    else:
        feet = feet_from_params(tri, scene.feet_params)
    validate_feet(tri, feet, scene.epsilon)
    return tri, feet


# ----- reports --------------------------------------------------------------


@dataclass(frozen=True)
class VerdictRecord:
    """One condition's outcome: boolean, residual, degeneracy flag."""

    holds: bool
    residual: Scalar
    degenerate: bool


@dataclass(frozen=True)
class ChartRecord:
    """Normalized-chart data; all coordinates are None when the chart fails."""

    degenerate: bool
    b1: Optional[Scalar]
    c2: Optional[Scalar]
    p: Optional[Scalar]
    q: Optional[Scalar]
    criterion: Optional[bool]


@dataclass(frozen=True)
class VerifyReport:
    """Everything the verification pipeline concluded about one scene."""

    mode: str
    verdicts: Tuple[Tuple[str, VerdictRecord], ...]
    witnesses: Tuple[Tuple[str, Optional[Tuple[Scalar, ...]]], ...]
    chart: ChartRecord
    agree: bool
    all_hold: bool
    provenance: Dict[str, Any]

    def verdict(self, name: str) -> VerdictRecord:
        return dict(self.verdicts)[name]

    def witness(self, name: str) -> Optional[Tuple[Scalar, ...]]:
        return dict(self.witnesses)[name]


def _verdict_record(verdict) -> VerdictRecord:
    degenerate = bool(getattr(verdict, "degenerate", False))
    return VerdictRecord(holds=verdict.holds, residual=verdict.residual, degenerate=degenerate)


def _chart_record(cfg: CevianConfig, eps: float) -> ChartRecord:
    try:
        chart = to_chart(cfg, eps)
    except ChartDegenerate:
        return ChartRecord(degenerate=True, b1=None, c2=None, p=None, q=None, criterion=None)
    criterion = None if chart.degenerate else chart.criterion
    return ChartRecord(
        degenerate=chart.degenerate,
        b1=chart.b1,
        c2=chart.c2,
        p=chart.p,
        q=chart.q,
        criterion=criterion,
    )


def report_from_conditions(
    scene: Scene, cfg: CevianConfig, conditions: ConditionReport
) -> VerifyReport:
    ordered = (
        ("outer6", conditions.outer6),
        ("inner6", conditions.inner6),
        ("tangent6", conditions.tangent6),
        ("concurrent", conditions.concurrent),
    )
    witnesses = tuple(
        (name, verdict.witness_conic.coeffs if getattr(verdict, "witness_conic", None) else None)
        for name, verdict in ordered[:3]
    )
    return VerifyReport(
        mode=scene.mode,
        verdicts=tuple((name, _verdict_record(v)) for name, v in ordered),
        witnesses=witnesses,
        chart=_chart_record(cfg, scene.epsilon),
        agree=conditions.agree,
        all_hold=conditions.all_hold,
        provenance={
            "scene": scene_to_dict(scene),
            "epsilon": scene.epsilon,
            "closure_tol": scene.closure_tol,
        },
    )


def verify_scene(scene: Scene) -> VerifyReport:
    """Run the four-condition check on a scene and assemble the report."""
    tri, feet = scene_instance(scene)
    cfg = build_config(tri, feet, scene.epsilon)
    conditions = check_conditions(cfg, scene.epsilon)
    return report_from_conditions(scene, cfg, conditions)


# ----- report serialization -------------------------------------------------


def _encode_opt(x: Optional[Scalar]):
    return None if x is None else encode_value(x)


def report_to_dict(report: VerifyReport) -> Dict[str, Any]:
    return {
        "mode": report.mode,
        "verdicts": {
            name: {
                "holds": rec.holds,
                "residual": encode_value(rec.residual),
                "degenerate": rec.degenerate,
            }
            for name, rec in report.verdicts
        },
        "witnesses": {
            name: None if coeffs is None else [encode_value(v) for v in coeffs]
            for name, coeffs in report.witnesses
        },
        "chart": {
            "degenerate": report.chart.degenerate,
            "b1": _encode_opt(report.chart.b1),
            "c2": _encode_opt(report.chart.c2),
            "p": _encode_opt(report.chart.p),
            "q": _encode_opt(report.chart.q),
            "criterion": report.chart.criterion,
        },
        "agree": report.agree,
        "all_hold": report.all_hold,
        "provenance": report.provenance,
    }


def _decode_opt(v: Any, exact: bool) -> Optional[Scalar]:
    return None if v is None else decode_value(v, exact)


def report_from_dict(data: Dict[str, Any]) -> VerifyReport:
    mode = data["mode"]
    if mode not in MODES:
        raise SceneError(f"mode must be one of {MODES}, got {mode!r}")
    exact = mode == "rational"
    verdicts = tuple(
        (
            name,
            VerdictRecord(
                holds=bool(rec["holds"]),
                residual=decode_value(rec["residual"], exact),
                degenerate=bool(rec["degenerate"]),
            ),
        )
        for name, rec in ((n, data["verdicts"][n]) for n in CONDITION_NAMES)
    )
    witnesses = tuple(
        (name, None if coeffs is None else tuple(decode_value(v, exact) for v in coeffs))
        for name, coeffs in ((n, data["witnesses"][n]) for n in CONDITION_NAMES[:3])
    )
    chart_raw = data["chart"]
    chart = ChartRecord(
        degenerate=bool(chart_raw["degenerate"]),
        b1=_decode_opt(chart_raw["b1"], exact),
        c2=_decode_opt(chart_raw["c2"], exact),
        p=_decode_opt(chart_raw["p"], exact),
        q=_decode_opt(chart_raw["q"], exact),
        criterion=chart_raw["criterion"],
    )
    return VerifyReport(
        mode=mode,
        verdicts=verdicts,
        witnesses=witnesses,
        chart=chart,
        agree=bool(data["agree"]),
        all_hold=bool(data["all_hold"]),
        provenance=data["provenance"],
    )


def report_to_json(report: VerifyReport, indent: int = 2) -> str:
    return json.dumps(report_to_dict(report), indent=indent, sort_keys=True)
