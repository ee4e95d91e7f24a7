import io
import json
import math
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from cardioidstar.cli import main

E = math.e


def run_cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_constants_json():
    code, out = run_cli("constants")
    assert code == 0
    rows = json.loads(out)
    table = {r["name"]: r for r in rows}
    assert table["convexity-of-p"]["value"] == pytest.approx(0.381966011250, abs=1e-9)
    assert table["Delta-radius"]["value"] == pytest.approx(0.474928074020, abs=1e-9)
    assert table["SL-radius"]["ref"]
    assert abs(table["SL-radius"]["residual"]) <= 1e-10


def test_constants_byte_stable():
    _, out1 = run_cli("constants")
    _, out2 = run_cli("constants")
    assert out1 == out2


def test_constants_csv():
    code, out = run_cli("constants", "--format", "csv")
    assert code == 0
    header = out.splitlines()[0]
    assert header.startswith("name,params,value")


def test_radius_command():
    code, out = run_cli("radius", "Se-radius")
    assert code == 0
    row = json.loads(out)[0]
    assert row["value"] == pytest.approx(1.0 - math.log(E - 1.0), abs=1e-10)
    assert row["sharp"] is True


def test_radius_command_with_parameters():
    code, out = run_cli("radius", "Mn-beta", "--n", "1", "--beta", "2.0")
    assert code == 0
    row = json.loads(out)[0]
    assert row["value"] == pytest.approx(1.0 / (2.0 * E + 1.0), abs=1e-10)


def test_radius_missing_parameter_is_usage_error():
    code, _ = run_cli("radius", "Mn-beta")
    assert code == 3


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["radius", "not-a-radius"])
    assert exc.value.code == 3


def test_curve_cardioid_start():
    code, out = run_cli("curve", "gamma0", "--samples", "17")
    rows = json.loads(out)
    mid = rows[len(rows) // 2]  # t = 0 sample
    assert mid["re"] == pytest.approx(1.0 + E, abs=1e-9)
    assert mid["im"] == pytest.approx(0.0, abs=1e-12)


def test_curve_inscribed_circle():
    _, out = run_cli("curve", "gamma6", "--samples", "64")
    rows = json.loads(out)
    center = 1.0 + (E * E - 1.0) / (2.0 * E)
    radius = (E * E + 1.0) / (2.0 * E)
    for row in rows:
        d = math.hypot(row["re"] - center, row["im"])
        assert d == pytest.approx(radius, abs=1e-9)


def test_curve_circumscribed_circle():
    _, out = run_cli("curve", "gamma7", "--samples", "64")
    rows = json.loads(out)
    center = (E * E + 1.0) / (2.0 * E)
    radius = 1.0 + (E * E - 1.0) / (2.0 * E)
    for row in rows:
        d = math.hypot(row["re"] - center, row["im"])
        assert d == pytest.approx(radius, abs=1e-9)


def test_curve_sample_floor():
    code, _ = run_cli("curve", "gamma0", "--samples", "8")
    assert code == 3


def test_coeffs_command():
    _, out = run_cli("coeffs", "--function", "f1", "--order", "6")
    rows = json.loads(out)
    values = [r["re"] for r in rows]
    assert values[1:7] == pytest.approx([1, 1, 1, 5 / 6, 5 / 8, 13 / 30], abs=1e-9)


def test_hankel_bound_command():
    _, out = run_cli("hankel-bound", "--grid", "64")
    row = json.loads(out)[0]
    assert row["bound"] == pytest.approx(0.150627, abs=1e-5)
    assert row["edge_x1_argmax"] == pytest.approx(1.11795, abs=1e-5)
    assert row["triangle_bound"] == pytest.approx(0.913864, abs=1e-6)


def test_verify_radii_suite():
    code, out = run_cli("verify", "--suite", "radii", "--seed", "7")
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"]
    assert report["failures"] == 0


def test_verify_coefficients_suite():
    code, out = run_cli("verify", "--suite", "coefficients", "--seed", "42")
    assert code == 0
    assert json.loads(out)["all_pass"]


def test_entry_point_runs():
    out = subprocess.run([sys.executable, "-m", "cardioidstar.cli",
                          "radius", "SL-radius"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)[0]["name"] == "SL-radius"
