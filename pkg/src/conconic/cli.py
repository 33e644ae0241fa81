"""Command line front end: verify scenes, trisector runs, chain runs.

Exit codes are part of the contract: 0 means the run succeeded and the
verdicts agree (for chains: the chain closed / the porism held), 1 means
the input could not be parsed or validated, and 2 means the geometry was
fine but the verdicts came back negative or inconsistent.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .cevians import Triangle, build_config, check_conditions
from .conics import Conic
from .errors import GeometryError, TheoremConsistencyError
from .morley import equilateral_side_spread, morley_config
from .poncelet import porism_check, trace_chain
from .projective import HPoint
from .scalars import DEFAULT_CLOSURE_TOL, DEFAULT_EPS, format_scalar
from .scene import (
    SceneError,
    load_scene,
    report_from_conditions,
    report_to_dict,
    scene_from_dict,
    scene_instance,
    scene_to_dict,
)
from .svg import render_chain, render_configuration, render_morley

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_DISAGREE = 2


def _fmt_value(v) -> str:
    if v is None:
        return "infinite"
    if isinstance(v, float):
        return f"{v:.6g}"
    return format_scalar(v)


def _parse_number(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as err:
        raise SceneError(f"cannot parse {text!r} as a number") from err


def _parse_triangle(text: str) -> Triangle:
    parts = text.replace(";", " ").split()
    if len(parts) != 3:
        raise SceneError("triangle must be three 'x,y' pairs separated by spaces")
    pts = []
    for part in parts:
        coords = part.split(",")
        if len(coords) != 2:
            raise SceneError(f"vertex {part!r} is not an 'x,y' pair")
        pts.append(HPoint(_parse_number(coords[0]), _parse_number(coords[1]), 1.0))
    return Triangle(*pts)


def _parse_conic(text: str) -> Conic:
    coeffs = [(_parse_number(v)) for v in text.split(",")]
    if len(coeffs) != 6:
        raise SceneError(
            "a conic needs six coefficients (x^2, xy, y^2, xz, yz, z^2 order)"
        )
    return Conic.from_coeffs(tuple(coeffs))


def _parse_point(text: str) -> HPoint:
    coords = text.split(",")
    if len(coords) == 2:
        return HPoint(_parse_number(coords[0]), _parse_number(coords[1]), 1.0)
    if len(coords) == 3:
        return HPoint(*(_parse_number(v) for v in coords))
    raise SceneError(f"point {text!r} must be 'x,y' or 'x,y,z'")


def _write_svg(path: Optional[str], content: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(content)


# ----- verify ---------------------------------------------------------------


def _print_verify_text(report) -> None:
    for name, rec in report.verdicts:
        flag = "holds" if rec.holds else "fails"
        extra = "  (degenerate witness)" if rec.degenerate else ""
        print(f"{name:<11} {flag}  residual {_fmt_value(rec.residual)}{extra}")
    ch = report.chart
    if ch.degenerate and ch.b1 is None:
        print("chart       degenerate (frame could not be built)")
    else:
        crit = "p = q" if ch.criterion else "p != q" if ch.criterion is not None else "undefined"
        print(
            f"chart       b1={_fmt_value(ch.b1)} c2={_fmt_value(ch.c2)} "
            f"p={_fmt_value(ch.p)} q={_fmt_value(ch.q)}  criterion: {crit}"
        )
    if report.agree:
        state = "all four conditions hold" if report.all_hold else "all four conditions fail"
        print(f"agreement   {state}")
    else:
        print("agreement   conditions disagree (degenerate or perturbed input)")


def _cmd_verify(args: argparse.Namespace) -> int:
    scene = load_scene(args.scene)
    overrides = {}
    if args.mode:
        overrides["mode"] = args.mode
    if args.epsilon is not None:
        overrides["epsilon"] = args.epsilon
    if args.closure_tol is not None:
        overrides["closure_tol"] = args.closure_tol
    if overrides:
        data = scene_to_dict(scene)
        data.update(overrides)
        if overrides.get("mode") == "float":
            scene = scene_from_dict(_floatify(data))
        else:
            scene = scene_from_dict(data)

    tri, feet = scene_instance(scene)
    cfg = build_config(tri, feet, scene.epsilon)
    try:
        conditions = check_conditions(cfg, scene.epsilon)
    except TheoremConsistencyError as err:
        print(f"internal consistency violation: {err}", file=sys.stderr)
        return EXIT_DISAGREE
    report = report_from_conditions(scene, cfg, conditions)

    if args.json:
        print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    else:
        _print_verify_text(report)

    if args.svg:
        witnesses = tuple(
            Conic.from_coeffs(c) if c is not None else None
            for _, c in report.witnesses[:2]
        )
        _write_svg(args.svg, render_configuration(cfg, witnesses, scene.epsilon))
    return EXIT_OK if report.agree else EXIT_DISAGREE


def _floatify(data):
    """Convert every exact string value in a scene dict to a JSON float."""
    if isinstance(data, dict):
        return {k: (_floatify(v) if k != "mode" and k != "generator" else v) for k, v in data.items()}
    if isinstance(data, list):
        return [_floatify(v) for v in data]
    if isinstance(data, str):
        return float(Fraction(data))
    return data


# ----- morley ---------------------------------------------------------------


def _cmd_morley(args: argparse.Namespace) -> int:
    tri = _parse_triangle(args.triangle)
    data = morley_config(tri, args.epsilon)
    _, spread = equilateral_side_spread(tri)
    payload = {
        "triangle": [[float(v) for v in p.coords] for p in tri.vertices],
        "morley_triangle": [[float(v) for v in p.coords] for p in data.morley_triangle],
        "equilateral_relative_spread": spread,
        "verdicts": {
            name: {"holds": rec.holds, "residual": float(rec.residual)}
            for name, rec in (
                ("outer6", data.report.outer6),
                ("inner6", data.report.inner6),
                ("tangent6", data.report.tangent6),
                ("concurrent", data.report.concurrent),
            )
        },
        "centers": {
            "first": [float(v) for v in data.centers.first.coords],
            "second": [float(v) for v in data.centers.second.coords],
        },
        "inner_conic": [float(v) for v in data.inner_conic.coeffs],
        "cevian_conic": [float(v) for v in data.cevian_conic.coeffs],
    }
    ok = data.report.all_hold
    if args.poncelet_samples:
        porism = porism_check(
            data.inner_conic,
            data.cevian_conic,
            expected_n=3,
            num_samples=args.poncelet_samples,
            closure_tol=args.closure_tol,
            eps=args.epsilon,
        )
        payload["porism"] = {
            "expected_n": 3,
            "all_closed": porism.all_closed,
            "max_gap": porism.max_gap,
            "steps": list(porism.steps),
        }
        ok = ok and porism.all_closed

    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"equilateral relative spread: {spread:.3e}")
        for name, rec in payload["verdicts"].items():
            print(f"{name:<11} {'holds' if rec['holds'] else 'fails'}  residual {rec['residual']:.3e}")
        second = payload["centers"]["second"]
        print(f"second trisector center: ({second[0]:.6g} : {second[1]:.6g} : {second[2]:.6g})")
        if "porism" in payload:
            p = payload["porism"]
            state = "closed" if p["all_closed"] else "did not close"
            print(f"chains {state} at n=3 over {args.poncelet_samples} samples (max gap {p['max_gap']:.3e})")

    if args.svg:
        _write_svg(args.svg, render_morley(data, args.epsilon))
    return EXIT_OK if ok else EXIT_DISAGREE


# ----- poncelet -------------------------------------------------------------


def _cmd_poncelet(args: argparse.Namespace) -> int:
    outer = _parse_conic(args.outer)
    inner = _parse_conic(args.inner)
    if args.expected_n is not None:
        report = porism_check(
            outer,
            inner,
            expected_n=args.expected_n,
            num_samples=args.samples,
            closure_tol=args.closure_tol,
            eps=args.epsilon,
        )
        payload = {
            "expected_n": args.expected_n,
            "samples": args.samples,
            "all_closed": report.all_closed,
            "max_gap": report.max_gap,
            "steps": list(report.steps),
        }
        if args.json:
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            state = "all chains closed" if report.all_closed else "some chains did not close"
            print(f"{state} at n={args.expected_n} over {args.samples} samples (max gap {report.max_gap:.3e})")
        if args.svg:
            from .poncelet import find_point_on_conic

            chain = trace_chain(outer, inner, find_point_on_conic(outer, args.epsilon),
                                max(args.expected_n, 3), args.closure_tol, args.epsilon)
            _write_svg(args.svg, render_chain(outer, inner, chain, args.epsilon))
        return EXIT_OK if report.all_closed else EXIT_DISAGREE

    if not args.start:
        raise SceneError("either --start or --expected-n with --samples is required")
    start = _parse_point(args.start)
    chain = trace_chain(outer, inner, start, args.max_steps, args.closure_tol, args.epsilon)
    payload = {
        "closure_step": chain.closure_step,
        "gap": chain.gap,
        "points": [[float(v) for v in p.coords] for p in chain.points],
    }
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        if chain.closed:
            print(f"chain closed at step {chain.closure_step} (gap {chain.gap:.3e})")
        else:
            print(f"chain did not close within {args.max_steps} steps (best gap {chain.gap:.3e})")
    if args.svg:
        _write_svg(args.svg, render_chain(outer, inner, chain, args.epsilon))
    return EXIT_OK if chain.closed else EXIT_DISAGREE


# ----- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conconic",
        description="Verify six-cevian conconicity conditions, trisector "
        "configurations, and tangent chain closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check the four conditions on a scene file")
    verify.add_argument("scene", help="path to a scene JSON file")
    verify.add_argument("--mode", choices=("rational", "float"), default=None,
                        help="override the scene's arithmetic backend")
    verify.add_argument("--epsilon", type=float, default=None,
                        help="float-mode tolerance for residual predicates")
    verify.add_argument("--closure-tol", type=float, default=None,
                        help="chain closure tolerance carried into reports")
    verify.add_argument("--svg", metavar="PATH", help="write a drawing of the configuration")
    verify.add_argument("--json", action="store_true", help="emit the report as JSON")
    verify.set_defaults(func=_cmd_verify)

    morley = sub.add_parser("morley", help="build and check a trisector configuration")
    morley.add_argument("--triangle", required=True,
                        help="three vertices as 'x,y x,y x,y'")
    morley.add_argument("--poncelet-samples", type=int, default=0, metavar="N",
                        help="also check chain closure at n=3 from N sample points")
    morley.add_argument("--epsilon", type=float, default=DEFAULT_EPS)
    morley.add_argument("--closure-tol", type=float, default=DEFAULT_CLOSURE_TOL)
    morley.add_argument("--svg", metavar="PATH", help="write a drawing of the configuration")
    morley.add_argument("--json", action="store_true", help="emit the report as JSON")
    morley.set_defaults(func=_cmd_morley)

    poncelet = sub.add_parser("poncelet", help="trace tangent chains between two conics")
    poncelet.add_argument("--outer", required=True, metavar="C",
                          help="outer conic, six comma-separated coefficients")
    poncelet.add_argument("--inner", required=True, metavar="C",
                          help="inner conic, six comma-separated coefficients")
    poncelet.add_argument("--start", metavar="PT", help="chain start 'x,y' on the outer conic")
    poncelet.add_argument("--max-steps", type=int, default=100)
    poncelet.add_argument("--expected-n", type=int, default=None,
                          help="porism mode: require closure at exactly this step")
    poncelet.add_argument("--samples", type=int, default=20,
                          help="porism mode: number of starting points")
    poncelet.add_argument("--epsilon", type=float, default=DEFAULT_EPS)
    poncelet.add_argument("--closure-tol", type=float, default=DEFAULT_CLOSURE_TOL)
    poncelet.add_argument("--svg", metavar="PATH", help="write a drawing of the chain")
    poncelet.add_argument("--json", action="store_true", help="emit the report as JSON")
    poncelet.set_defaults(func=_cmd_poncelet)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SceneError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremConsistencyError as err:
        print(f"internal consistency violation: {err}", file=sys.stderr)
        return EXIT_DISAGREE
    except GeometryError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
