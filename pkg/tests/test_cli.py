"""CLI commands: outputs, exit codes, spec diagnostics, determinism."""

import json

import pytest

from zmcsurf.cli import main
from zmcsurf.presets import PRESET_ORDER


def _run(args):
    return main(args)


def test_list_presets(capsys):
    assert _run(["--list-presets"]) == 0
    out = capsys.readouterr().out.split()
    assert out == list(PRESET_ORDER)


def test_generate_z2_outputs(tmp_path):
    out = tmp_path / "z2"
    assert _run(["generate", "--preset", "z2", "--out", str(out)]) == 0
    csv = (out / "surface.csv").read_text()
    assert csv.splitlines()[0] == "u,v,f0,f1,f2,sigma,L,M,N"
    meta = json.loads((out / "metadata.json").read_text())
    assert meta["route"] == "ko" and meta["preset"] == "z2"
    assert meta["grid"]["nu"] == 33


def test_classify_summary_counts(tmp_path):
    out = tmp_path / "z3"
    assert _run(["classify", "--preset", "z3", "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["counts"]["umbilic"] == 1
    assert summary["counts"]["negative"] == 0
    assert summary["umbilic_nodes"] == [["0", "0"]]


def test_classify_f1_negative_exactly_below_diagonal(tmp_path):
    out = tmp_path / "f1"
    assert _run(["classify", "--preset", "f1", "--out", str(out)]) == 0
    rows = (out / "classification.csv").read_text().splitlines()[1:]
    for row in rows:
        parts = row.split(",")
        u, v, kind = float(parts[0]), float(parts[1]), parts[2]
        if kind == "masked":
            continue
        y = (u - v) / 2
        if y < 0:
            assert kind == "negative"
        elif y > 0:
            assert kind == "positive"
        else:
            assert kind == "quasi_umbilic"


def test_classify_exa1_totally_quasi(tmp_path):
    out = tmp_path / "exA1"
    assert _run(["classify", "--preset", "exA1", "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    counts = summary["counts"]
    assert counts["quasi_umbilic"] == counts["total"] - counts["masked"]


def test_index_reports(tmp_path):
    out = tmp_path / "z3"
    assert _run(["index", "--preset", "z3", "--out", str(out)]) == 0
    report = json.loads((out / "index_report.json").read_text())
    assert report["predicted_indices"] == [-1, 1]
    assert sorted(report["measured_indices"].values()) == [-1, 1]
    assert report["match"] is True

    out5 = tmp_path / "z5"
    assert _run(["index", "--preset", "z5", "--out", str(out5)]) == 0
    report5 = json.loads((out5 / "index_report.json").read_text())
    assert report5["predicted_indices"] == [0]
    assert report5["match"] is True

    outs = tmp_path / "sm2"
    assert _run(["index", "--preset", "spacelike_m2", "--out", str(outs)]) == 0
    reps = json.loads((outs / "index_report.json").read_text())
    assert reps["measured_index"] == -1.0 and reps["match"] is True


def test_index_skips_measurement_when_not_admissible(tmp_path):
    out = tmp_path / "z2"
    assert _run(["index", "--preset", "z2", "--out", str(out)]) == 0
    report = json.loads((out / "index_report.json").read_text())
    assert report["measured_indices"] is None
    assert "skipped" in report["measured_info"]
    winding = (out / "winding.csv").read_text().splitlines()
    assert len(winding) == 1  # header only


def test_flow_svg_banner_for_non_admissible(tmp_path):
    out = tmp_path / "z2"
    assert _run(["flow", "--preset", "z2", "--out", str(out)]) == 0
    svg = (out / "flow.svg").read_text()
    assert "classification only" in svg
    assert "<polyline" not in svg

    out3 = tmp_path / "z3"
    assert _run(["flow", "--preset", "z3", "--out", str(out3)]) == 0
    svg3 = (out3 / "flow.svg").read_text()
    assert "<polyline" in svg3 and "classification only" not in svg3
    assert "chart_to_viewport" in svg3


def test_exit_code_2_on_bad_spec(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"route": "warp", "data": {}, "grid": {}}))
    code = _run(["generate", "--spec", str(bad), "--out", str(tmp_path / "o")])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["pointer"] == "/route"


def test_exit_code_2_with_json_pointer_to_field(tmp_path, capsys):
    spec = {
        "route": "null",
        "data": {
            "g1": {"kind": "poly", "coeffs": [0, "1/oops"]},
            "g2": {"kind": "poly", "coeffs": [0]},
            "w1": {"kind": "poly", "coeffs": [1]},
            "w2": {"kind": "poly", "coeffs": [1]},
        },
        "grid": {"u_min": -1, "u_max": 1, "v_min": -1, "v_max": 1, "nu": 17, "nv": 17},
    }
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    code = _run(["generate", "--spec", str(f), "--out", str(tmp_path / "o")])
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["pointer"] == "/data/g1/coeffs/1"


def test_grid_resolution_floor(tmp_path, capsys):
    spec = {
        "route": "ko",
        "data": {"g": {"z_poly": [0, 0, 1]}, "omega_hat": {"z_poly": [1]}},
        "grid": {"u_min": -1, "u_max": 1, "v_min": -1, "v_max": 1, "nu": 8, "nv": 8},
    }
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    assert _run(["generate", "--spec", str(f), "--out", str(tmp_path / "o")]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["pointer"] == "/grid/nu"


def test_custom_spec_roundtrip(tmp_path):
    spec = {
        "route": "null",
        "data": {
            "g1": {"kind": "poly", "coeffs": [0, 1]},
            "g2": {"kind": "poly", "coeffs": [0, 0, 1]},
            "w1": {"kind": "poly", "coeffs": [1]},
            "w2": {"kind": "poly", "coeffs": [1]},
        },
        "grid": {
            "u_min": "-1/2",
            "u_max": "1/2",
            "v_min": "-1/2",
            "v_max": "1/2",
            "nu": 17,
            "nv": 17,
        },
    }
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    out = tmp_path / "o"
    assert _run(["generate", "--spec", str(f), "--out", str(out)]) == 0
    lines = (out / "surface.csv").read_text().splitlines()
    assert len(lines) == 1 + 17 * 17


def test_chart_route_classify(tmp_path):
    n = 16
    rows = lambda val: [[val] * n for _ in range(n)]
    spec = {
        "route": "chart",
        "data": {"sigma": rows(0.0), "L": rows(1.0), "M": rows(0.0), "N": rows(1.0)},
        "grid": {"u_min": -1, "u_max": 1, "v_min": -1, "v_max": 1, "nu": n, "nv": n},
    }
    f = tmp_path / "chart.json"
    f.write_text(json.dumps(spec))
    out = tmp_path / "o"
    assert _run(["classify", "--spec", str(f), "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    # L = N = 1, M = 0: D > 0 everywhere
    assert summary["counts"]["positive"] == n * n
    # generate is refused for raw charts
    assert _run(["generate", "--spec", str(f), "--out", str(out)]) == 2


def test_exit_code_3_on_winding_guard_failure(tmp_path, capsys):
    # flows exist near o but the eigenfield domain (where the rescaled
    # branch factors stay positive) is narrower than the winding circle
    spec = {
        "route": "null",
        "data": {
            "g1": {"kind": "poly", "coeffs": [0, 0, 0, 1]},
            "g2": {"kind": "poly", "coeffs": [0, 0, 0, 1]},
            "w1": {"kind": "poly", "coeffs": [1, 0, -25]},
            "w2": {"kind": "poly", "coeffs": [1, 0, -25]},
        },
        "grid": {"u_min": -1, "u_max": 1, "v_min": -1, "v_max": 1, "nu": 17, "nv": 17},
        "analysis": {"winding_radius": 0.45},
    }
    f = tmp_path / "spec.json"
    f.write_text(json.dumps(spec))
    code = _run(["index", "--spec", str(f), "--out", str(tmp_path / "o")])
    assert code == 3
    err = json.loads(capsys.readouterr().err)
    assert "undefined" in err["error"] or "vanished" in err["error"]


def test_grid_override(tmp_path):
    out = tmp_path / "o"
    assert _run(["generate", "--preset", "z2", "--out", str(out), "--grid", "17"]) == 0
    lines = (out / "surface.csv").read_text().splitlines()
    assert len(lines) == 1 + 17 * 17


@pytest.mark.parametrize("preset", ["z3", "f2", "spacelike_m1"])
def test_byte_determinism(tmp_path, preset):
    for cmd in ("generate", "classify", "index", "flow"):
        a = tmp_path / f"{preset}_{cmd}_a"
        b = tmp_path / f"{preset}_{cmd}_b"
        assert _run([cmd, "--preset", preset, "--out", str(a)]) == 0
        assert _run([cmd, "--preset", preset, "--out", str(b)]) == 0
        for fa in sorted(a.iterdir()):
            fb = b / fa.name
            assert fa.read_bytes() == fb.read_bytes(), (preset, cmd, fa.name)
