import json
from fractions import Fraction

import pytest

from conconic import (
    load_scene,
    report_from_dict,
    report_to_dict,
    report_to_json,
    scene_from_dict,
    scene_instance,
    scene_to_dict,
    verify_scene,
)
from conconic.scene import SceneError

ISOGONAL_SCENE = {
    "triangle": [["0", "0"], ["4", "0"], ["0", "3"]],
    "mode": "rational",
    "feet": {"generator": "isogonal", "params": ["1/2", "1/2", "1/2"]},
}

EXPLICIT_SCENE = {
    "triangle": [["0", "0"], ["4", "0"], ["0", "3"]],
    "feet": {"params": ["1/3", "2/5", "3/7", "1/2", "1/2", "1/2"]},
}

THROUGH_SCENE = {
    "triangle": [["0", "0"], ["4", "0"], ["0", "3"]],
    "feet": {"generator": "through_points", "points": [["1", "1/2"], ["3/2", "1"]]},
}


def test_scene_round_trip():
    scene = scene_from_dict(ISOGONAL_SCENE)
    assert scene_from_dict(scene_to_dict(scene)) == scene


def test_scene_defaults():
    scene = scene_from_dict(EXPLICIT_SCENE)
    assert scene.mode == "rational"
    assert scene.exact
    assert scene.epsilon == 1e-9
    assert scene.closure_tol == 1e-7


def test_scene_parses_decimal_strings_exactly():
    scene = scene_from_dict(
        {
            "triangle": [["0", "0"], ["4", "0"], ["0", "3"]],
            "feet": {"params": ["0.25", "0.5", "0.75", "1/3", "2/3", "0.1"]},
        }
    )
    assert scene.feet_params[0] == Fraction(1, 4)
    assert scene.feet_params[5] == Fraction(1, 10)


def test_scene_validation_errors():
    cases = [
        ({}, "triangle"),
        ({"triangle": [["0", "0"]], "feet": {"params": ["1/2"] * 6}}, "three vertices"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {}}, "params or a generator"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {"params": ["1/2"] * 5}}, "six side"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {"generator": "dual"}}, "generator"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {"params": ["1/2"] * 6}, "mode": "auto"}, "mode"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {"params": ["1/2"] * 6}, "extra": 1}, "unknown"),
        ({"triangle": [[0.5, "0"], ["4", "0"], ["0", "3"]], "feet": {"params": ["1/2"] * 6}}, "rational mode"),
        ({"triangle": ISOGONAL_SCENE["triangle"], "feet": {"params": ["1/2"] * 6}, "epsilon": -1}, "positive"),
    ]
    for data, needle in cases:
        with pytest.raises(SceneError) as exc:
            scene_from_dict(data)
        assert needle in str(exc.value)


def test_scene_instance_materializes_feet():
    tri, feet = scene_instance(scene_from_dict(EXPLICIT_SCENE))
    from conconic import HPoint

    # a1 at t=1/3 on BC: B + (C - B)/3 = (8/3, 1)
    assert feet.A1 == HPoint(Fraction(8, 3), 1, 1)
    # medians in the second triple
    assert feet.A2 == HPoint(2, Fraction(3, 2), 1)


def test_verify_report_shape_and_chart():
    report = verify_scene(scene_from_dict(ISOGONAL_SCENE))
    assert [name for name, _ in report.verdicts] == ["outer6", "inner6", "tangent6", "concurrent"]
    assert report.agree and report.all_hold
    assert report.verdict("outer6").residual == 0
    assert report.chart.b1 == Fraction(25, 16)
    assert report.chart.c2 == Fraction(9, 25)
    assert report.chart.p == report.chart.q == Fraction(9, 16)
    assert report.witness("outer6") is not None


def test_report_round_trip_rational():
    for scene_dict in (ISOGONAL_SCENE, EXPLICIT_SCENE, THROUGH_SCENE):
        report = verify_scene(scene_from_dict(scene_dict))
        wire = report_to_json(report)
        assert report_from_dict(json.loads(wire)) == report


def test_report_round_trip_float():
    scene = scene_from_dict(
        {
            "triangle": [[0.0, 0.0], [4.0, 0.0], [0.0, 3.0]],
            "mode": "float",
            "feet": {"generator": "isotomic", "params": [0.3, 0.45, 0.61]},
        }
    )
    report = verify_scene(scene)
    assert report.all_hold
    wire = report_to_json(report)
    assert report_from_dict(json.loads(wire)) == report


def test_rational_values_travel_as_strings():
    report = verify_scene(scene_from_dict(ISOGONAL_SCENE))
    data = report_to_dict(report)
    assert data["chart"]["b1"] == "25/16"
    assert data["verdicts"]["outer6"]["residual"] == "0"
    assert all(isinstance(v, str) for v in data["witnesses"]["outer6"])


def test_median_second_triple_scene_disagrees():
    report = verify_scene(scene_from_dict(EXPLICIT_SCENE))
    # the second triple is the median triple, whose cevians concur: the
    # derived points collapse and the six-derived-point determinant
    # vanishes trivially while the other three conditions fail
    assert [rec.holds for _, rec in report.verdicts] == [False, True, False, False]
    assert not report.agree


def test_load_scene_from_file(tmp_path):
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(ISOGONAL_SCENE))
    scene = load_scene(str(path))
    assert scene.generator == "isogonal"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SceneError):
        load_scene(str(bad))
