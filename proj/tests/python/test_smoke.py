import cmath
import json

import pytest

import diffortho


def test_spec_round_trip():
    spec = diffortho.MeasureSpec("laguerre", ["1", "1"])
    assert spec.m == 1
    again = diffortho.MeasureSpec.from_json(spec.to_json())
    assert json.loads(again.to_json()) == json.loads(spec.to_json())


def test_bad_measure_raises():
    with pytest.raises(diffortho.DiffOrthoError, match="E_MEASURE"):
        diffortho.MeasureSpec("laguerre", ["-1", "1"])


def test_construct_and_residuals():
    spec = diffortho.MeasureSpec("hermite", ["1", "0", "1"])
    out = diffortho.construct(spec, 8)
    assert len(out["coeffs_basis"]) == 9
    assert out["eigen_residual"] < 1e-60
    assert max(diffortho.diff_orthogonality_residuals(spec, 8)) < 1e-30


def test_zeros_are_real():
    spec = diffortho.MeasureSpec("laguerre", ["1", "1"], alpha="0.5")
    zs = diffortho.zeros(spec, 12)
    assert len(zs) == 12
    assert all(abs(z.imag) < 1e-20 for z in zs)


def test_nth_root_limit():
    spec = diffortho.MeasureSpec("hermite", ["1"])
    value, limit = diffortho.nth_root(spec, 2.0, 100)
    assert limit == pytest.approx(1.93423, rel=1e-5)
    assert abs(value / limit - 1) < 0.05


def test_flow():
    assert diffortho.velocity("hermite", [-1, 1], 0) == pytest.approx(-1)
    rep = diffortho.stagnation(diffortho.MeasureSpec("laguerre", ["1", "1"]), 6)
    assert rep["recovered"] == 6
    assert rep["max_residual"] < 1e-30


def test_level_curve_passes_through_zeta():
    lines = diffortho.level_curve("hermite", 4.0, 0.05)
    assert min(abs(v - 4) for line in lines for v in line) < 0.05


def test_cli_entry(tmp_path):
    code, out, err = diffortho.run(["construct", "--case", "laguerre", "--rho", "-1,1", "--n", "4",
                                    "--out", str(tmp_path)])
    assert code == 2
    assert "E_MEASURE" in err
