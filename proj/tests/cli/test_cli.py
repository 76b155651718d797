import json
import os
import shutil
import subprocess
from decimal import Decimal, getcontext
from pathlib import Path

import pytest

getcontext().prec = 120

CLI = os.environ.get("ARCTIC_CLI") or shutil.which("arctic")
ROOT = Path(__file__).resolve().parents[2]

pytestmark = pytest.mark.skipif(CLI is None, reason="arctic executable not found")

HALF_PI = "1/2 pi"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ARCTIC_PRECISION_BITS", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=600)


def run_json(*args, **kw):
    res = run(*args, **kw)
    assert res.returncode == 0, res.stderr
    return json.loads(res.stdout)


def model(n, d, lam=HALF_PI):
    return ["--n", str(n), "--d", str(d), "--lambda", lam]


def parse_csv(text):
    lines = text.strip().splitlines()
    assert lines[0] == "portion,zeta,x,y"
    rows = []
    for line in lines[1:]:
        portion, zeta, x, y = line.split(",")
        rows.append((portion, Decimal(zeta), Decimal(x), Decimal(y)))
    return rows, lines[1:]


def test_params_for_alternating_sign_matrices():
    j = run_json("params", *model(3, 2))
    assert j["eta"] == "1/6 pi"
    assert j["delta"] == pytest.approx(0.5, abs=1e-15)
    assert j["kappa"] == pytest.approx(0.5, abs=1e-15)
    assert j["alpha"] == {"n": 3, "d": 2}
    assert j["lambda"] == HALF_PI


def test_params_text_format():
    res = run("params", *model(2, 1), "--format", "text")
    assert res.returncode == 0
    assert "kappa" in res.stdout


def test_params_half_integer_delta():
    j = run_json("params", *model(5, 2))
    assert j["delta"] == pytest.approx(-0.309017, abs=1e-6)
    assert Decimal(j["delta_hp"]) == pytest.approx((1 - Decimal(5).sqrt()) / 4, abs=Decimal("1e-70"))


def test_input_errors_exit_with_two():
    res = run("params", *model(2, 2))
    assert res.returncode == 2
    assert "n and d must be coprime" in res.stderr
    assert run("params", *model(2, 1, "pi/2")).returncode == 2
    assert run("params", *model(2, 1, "0.1")).returncode == 2
    assert run("params", *model(2, 1), "--precision-bits", "32").returncode == 2
    assert run("sample", *model(2, 1), "--portions", "north").returncode == 2
    assert run("nonsense").returncode == 2


def test_precision_from_environment():
    j = run_json("params", *model(2, 1), env={"ARCTIC_PRECISION_BITS": "128"})
    assert j["precision_bits"] == 128
    assert run("params", *model(2, 1), env={"ARCTIC_PRECISION_BITS": "16"}).returncode == 2


def test_sample_csv_circle_and_decimals():
    res = run("sample", *model(2, 1), "--samples", "100")
    assert res.returncode == 0
    rows, raw = parse_csv(res.stdout)
    assert {r[0] for r in rows} == {"NW", "NE", "SE", "SW"}
    assert len(rows) == 400
    quarter = Decimal(1) / 4
    half = Decimal(1) / 2
    for _, _, x, y in rows:
        assert abs((x - half) ** 2 + (y - half) ** 2 - quarter) < Decimal("1e-60")
    # precision_bits / 3 = 85 digits after the point
    for line in raw:
        for field in line.split(",")[1:]:
            assert len(field.split(".")[1]) == 85


def test_sample_nw_endpoints_and_reversal():
    res = run("sample", *model(5, 2), "--samples", "40", "--portions", "nw")
    assert res.returncode == 0
    rows, _ = parse_csv(res.stdout)
    assert {r[0] for r in rows} == {"NW"}
    assert (rows[0][2], rows[0][3]) == (Decimal("0.5"), Decimal(0))
    assert (rows[-1][2], rows[-1][3]) == (Decimal(0), Decimal("0.5"))
    for fwd, back in zip(rows, reversed(rows)):
        assert abs(fwd[2] - back[3]) < Decimal("1e-60")
        assert abs(fwd[3] - back[2]) < Decimal("1e-60")


def test_sample_json_and_svg(tmp_path):
    j = run_json("sample", *model(3, 2), "--samples", "10", "--format", "json")
    assert j is not None
    out = tmp_path / "plot.svg"
    res = run("sample", *model(3, 2), "--samples", "30", "--format", "svg", "--out", str(out))
    assert res.returncode == 0
    svg = out.read_text()
    assert svg.startswith("<svg")
    assert svg.count("<polyline") >= 4
    assert "<rect" in svg


def test_poly_and_disc():
    poly = run_json("poly", *model(3, 2))
    assert any(p["name"] == "w2" for p in poly["poles"])
    disc = run_json("disc", *model(3, 2))
    assert disc["deg_P"] == 2
    assert disc["surface_degree"] == 2
    assert len(disc["coefficients"]) == 6


def test_curve_with_golden_comparison():
    j = run_json("curve", *model(3, 2), "--golden")
    assert j["curve_degree"] == 2
    assert j["golden"]["name"] == "alpha3_2"
    assert j["golden"]["max_deviation"] < 1e-15
    assert set(j["residuals"]) >= {"fit", "on_curve_max"}
    for comp in j["components"]:
        assert comp["classification"] in ("arctic", "spurious")
        assert len(comp["point"]) == 2
        assert "double_root" in comp


def test_curve_alpha_four():
    j = run_json("curve", *model(4, 1))
    assert j["deg_P"] == 6
    assert j["curve_degree"] == 10


def test_curve_new_model_is_flagged():
    j = run_json("curve", *model(7, 2))
    assert j["deg_P"] == 10
    assert j["curve_degree"] <= 18
    assert "component structure unverified" in j["warnings"]
    assert j["component_structure_verified"] is False


def test_curve_output_is_deterministic():
    a = run("curve", *model(5, 2))
    b = run("curve", *model(5, 2))
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_curve_svg(tmp_path):
    out = tmp_path / "curve.svg"
    assert run("curve", *model(2, 1), "--format", "svg", "--out", str(out)).returncode == 0
    assert out.read_text().startswith("<svg")


def test_verify_all_cases():
    res = run("verify", "--golden", "all")
    assert res.returncode == 0
    assert res.stdout.count("PASS") == 5


def test_verify_reports_mismatch_with_four(tmp_path):
    data = json.loads((ROOT / "data" / "golden_cases.json").read_text())
    case = next(c for c in data["cases"] if c["name"] == "alpha3_2")
    for c in case["coefficients"]:
        if c["i"] == 1 and c["j"] == 1:
            c["p"] = -3
    bad = tmp_path / "golden.json"
    bad.write_text(json.dumps(data))
    res = run("verify", "--golden", "alpha3_2", "--golden-file", str(bad))
    assert res.returncode == 4


def test_verify_unreadable_fixture_is_input_error(tmp_path):
    bad = tmp_path / "golden.json"
    bad.write_text("{")
    assert run("verify", "--golden", "all", "--golden-file", str(bad)).returncode == 2
    assert run("verify", "--golden", "no_such_case").returncode == 2
