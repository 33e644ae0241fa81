import json

import pytest

from conconic.cli import main

ISOGONAL_SCENE = """
{
  "triangle": [["0","0"], ["4","0"], ["0","3"]],
  "mode": "rational",
  "feet": {"generator": "isogonal", "params": ["1/2", "1/2", "1/2"]}
}
"""

MIXED_SCENE = """
{
  "triangle": [["0","0"], ["4","0"], ["0","3"]],
  "feet": {"params": ["1/3", "2/5", "3/7", "1/2", "1/2", "1/2"]}
}
"""


@pytest.fixture
def scene_file(tmp_path):
    def write(content, name="scene.json"):
        path = tmp_path / name
        path.write_text(content)
        return str(path)

    return write


def test_verify_agreeing_scene_exits_zero(scene_file, capsys):
    code = main(["verify", scene_file(ISOGONAL_SCENE)])
    out = capsys.readouterr().out
    assert code == 0
    assert "outer6" in out and "holds" in out
    assert "p = q" in out


def test_verify_disagreeing_scene_exits_two(scene_file, capsys):
    code = main(["verify", scene_file(MIXED_SCENE)])
    out = capsys.readouterr().out
    assert code == 2
    assert "disagree" in out


def test_verify_json_report(scene_file, capsys):
    code = main(["verify", scene_file(ISOGONAL_SCENE), "--json"])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["agree"] is True
    assert data["chart"]["p"] == "9/16"
    assert list(data["verdicts"]) == sorted(data["verdicts"])


def test_verify_missing_file_exits_one(capsys):
    code = main(["verify", "/nonexistent/scene.json"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_verify_invalid_scene_exits_one(scene_file, capsys):
    code = main(["verify", scene_file('{"triangle": []}')])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_verify_float_mode_override(scene_file, capsys):
    code = main(["verify", scene_file(ISOGONAL_SCENE), "--mode", "float", "--json"])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["mode"] == "float"
    assert isinstance(data["verdicts"]["outer6"]["residual"], float)


def test_verify_svg_is_deterministic(scene_file, tmp_path):
    scene = scene_file(ISOGONAL_SCENE)
    svg1 = tmp_path / "a.svg"
    svg2 = tmp_path / "b.svg"
    assert main(["verify", scene, "--svg", str(svg1)]) == 0
    assert main(["verify", scene, "--svg", str(svg2)]) == 0
    assert svg1.read_bytes() == svg2.read_bytes()
    assert svg1.read_text().startswith("<?xml")


def test_morley_command(capsys, tmp_path):
    svg = tmp_path / "morley.svg"
    code = main(
        ["morley", "--triangle", "0,0 4,0 0,3", "--poncelet-samples", "10",
         "--svg", str(svg), "--json"]
    )
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["equilateral_relative_spread"] < 1e-10
    assert all(rec["holds"] for rec in data["verdicts"].values())
    assert data["porism"]["all_closed"] is True
    assert data["porism"]["steps"] == [3] * 10
    assert svg.exists()


def test_morley_rejects_bad_triangle(capsys):
    code = main(["morley", "--triangle", "0,0 1,1 2,2"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_poncelet_single_chain(capsys):
    code = main(
        ["poncelet", "--outer", "1,0,1,0,0,-4", "--inner", "1,0,1,0,0,-1",
         "--start", "2,0", "--json"]
    )
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["closure_step"] == 3
    assert data["gap"] <= 1e-9


def test_poncelet_porism_mode(capsys):
    code = main(
        ["poncelet", "--outer", "1,0,1,0,0,-4", "--inner", "1,0,1,0,0,-1",
         "--expected-n", "3", "--samples", "12", "--json"]
    )
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["all_closed"] is True


def test_poncelet_open_chain_exits_two(capsys):
    code = main(
        ["poncelet", "--outer", "1,0,1,0,0,-4", "--inner", "1,0,1,0,0,-1.69",
         "--start", "2,0", "--max-steps", "40"]
    )
    assert code == 2
    assert "did not close" in capsys.readouterr().out


def test_poncelet_requires_start_or_expected_n(capsys):
    code = main(["poncelet", "--outer", "1,0,1,0,0,-4", "--inner", "1,0,1,0,0,-1"])
    assert code == 1
    assert "start" in capsys.readouterr().err


def test_poncelet_start_off_conic_exits_one(capsys):
    code = main(
        ["poncelet", "--outer", "1,0,1,0,0,-4", "--inner", "1,0,1,0,0,-1",
         "--start", "1.5,0"]
    )
    assert code == 1
