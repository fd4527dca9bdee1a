import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from wgeom.cli import main
from wgeom.curves import count_crossings, curve_table
from wgeom.core import make_wstate
from wgeom.errors import DomainError
from wgeom.states import boundary_state

REPORT_KEYS = {
    "n", "coeffs", "class", "branch", "r", "r1", "r2", "g", "g_squared", "e_g_nats", "thetas", "x",
    "nearest_product_amplitudes", "residual_stationarity", "residual_constraint",
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_measure_symmetric(capsys):
    code, out, _ = run(capsys, "measure", "--coeffs", "0.577350269,0.577350269,0.577350269")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == REPORT_KEYS
    assert rep["g_squared"] == pytest.approx(4 / 9, abs=1e-6)
    assert rep["class"] == "highly_entangled_symmetric" and rep["branch"] == "plus"


def test_measure_slightly(capsys):
    code, out, _ = run(capsys, "measure", "--coeffs", "0.3,0.4,0.866025404")
    rep = json.loads(out)
    assert rep["class"] == "slightly_entangled"
    assert rep["g"] == pytest.approx(0.866025, abs=1e-6)
    assert rep["x"] is None and rep["r"] is None
    assert rep["nearest_product_amplitudes"] == [[1.0, 0.0], [1.0, 0.0], [0.0, 1.0]]


def test_measure_normalize(capsys):
    _, a, _ = run(capsys, "measure", "--coeffs", "1,2,2", "--normalize")
    _, b, _ = run(capsys, "measure", "--coeffs", f"{1/3!r},{2/3!r},{2/3!r}")
    a, b = json.loads(a), json.loads(b)
    for key in ("g", "g_squared", "e_g_nats", "r", "class"):
        assert a[key] == b[key]


def test_measure_complex_and_file(capsys, tmp_path):
    f = tmp_path / "w.json"
    f.write_text(json.dumps({"coefficients": [[0.0, 0.6], -0.8]}))
    code, out, _ = run(capsys, "measure", "--input", str(f))
    assert code == 0 and json.loads(out)["g"] == 0.8
    code, out, _ = run(capsys, "measure", "--coeffs", "0.6j,-0.8", "--format", "text")
    assert code == 0 and "g: 0.8" in out


def test_fifteen_significant_digits(capsys):
    _, out, _ = run(capsys, "measure", "--coeffs", "0.2,0.68,0.70541", "--normalize")
    rep = json.loads(out)
    for v in rep["thetas"] + [rep["g"], rep["r"]]:
        assert len(repr(v).replace(".", "").lstrip("0")) <= 16


@pytest.mark.parametrize(
    "argv",
    [
        ["measure", "--coeffs", "0.6,0.7"],
        ["measure", "--coeffs", "1"],
        ["measure", "--coeffs", "abc,1"],
        ["measure", "--coeffs", ",".join(["0.1"] * 33), "--normalize"],
        ["measure"],
        ["verify", "--n", "3", "--trials", "0"],
        ["curves", "--coeffs", "0.6,0.8", "--r-min", "0.5"],
    ],
)
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.strip().count("\n") == 0 and err.startswith("wgeom:")


def test_large_n_through_file(capsys, tmp_path):
    f = tmp_path / "w.json"
    f.write_text(json.dumps({"coefficients": [1.0] * 40}))
    code, out, _ = run(capsys, "measure", "--input", str(f), "--normalize")
    rep = json.loads(out)
    assert code == 0 and rep["n"] == 40
    assert rep["g_squared"] == pytest.approx((1 - 1 / 40) ** 39, abs=1e-12)


def test_duality_round_trip(capsys):
    code, out, _ = run(capsys, "duality", "--from", "w", "--values", "0.577350269,0.577350269,0.577350269")
    x = json.loads(out)["x"]
    assert code == 0
    np.testing.assert_allclose(x, 0.57735, atol=1e-6)
    code, out, _ = run(capsys, "duality", "--from", "x", "--values", ",".join(map(repr, x)))
    assert code == 0
    np.testing.assert_allclose(json.loads(out)["coeffs"], 1 / math.sqrt(3), atol=1e-9)

    c = [0.2, 0.5, 0.55, 0.6]
    c = (np.array(c) / np.linalg.norm(c)).tolist()
    _, out, _ = run(capsys, "duality", "--from", "w", "--values", ",".join(map(repr, c)))
    _, out, _ = run(capsys, "duality", "--from", "x", "--values", ",".join(map(repr, json.loads(out)["x"])))
    np.testing.assert_allclose(json.loads(out)["coeffs"], c, atol=1e-9)


def test_duality_domain_errors(capsys):
    assert run(capsys, "duality", "--from", "w", "--values", "0.5,0.5,0.7071067811865476")[0] == 3
    assert run(capsys, "duality", "--from", "x", "--values", "0.6,0.6,0.6")[0] == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--trials", "50", "--seed", "1")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    counts = rep["class_counts"]
    assert counts["slightly_entangled"] + counts["shared"] == 50


def test_verify_failure_exit_1(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--trials", "3", "--restarts", "1", "--max-iters", "1", "--tol", "1e-15")
    assert code == 1 and json.loads(out)["pass"] is False


def test_verify_n5_acceptance_run(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--trials", "100", "--seed", "42", "--restarts", "50", "--tol", "1e-6")
    assert code == 0, out


def test_sweep(capsys, tmp_path):
    out_path = tmp_path / "s.csv"
    code, _, _ = run(capsys, "sweep", "--n", "3", "--grid", "6", "--output", str(out_path))
    rows = list(csv.DictReader(out_path.open()))
    assert code == 0 and len(rows) == math.comb(8, 2)
    for row in rows:
        assert float(row["g"]) >= max(float(row[f"c{k}"]) for k in (1, 2, 3)) - 1e-12
    assert {r["class"] for r in rows} >= {"product", "slightly_entangled", "shared", "highly_entangled_symmetric"}


def test_curves_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "curves", "--coeffs", "1,2,3,4,4.5", "--normalize", "--samples", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["r", "f_plus", "f_minus", "target"]
    assert len(rows) == 3
    assert float(rows[1][0]) == make_wstate([1, 2, 3, 4, 4.5], normalize=True).c_max
    assert float(rows[1][3]) == 3.0


def test_curves_shortest_repr(capsys):
    _, out, _ = run(capsys, "curves", "--coeffs", "0.6,0.8", "--samples", "5")
    for line in out.splitlines()[1:]:
        for tok in line.split(","):
            assert repr(float(tok)) == tok


def test_curve_table_domain():
    w = make_wstate([0.6, 0.8])
    with pytest.raises(DomainError):
        curve_table(w, 0.7, 1.0, 10)


def test_count_crossings():
    assert count_crossings([0.0, 1.0, 2.0], 1.5) == 1
    assert count_crossings([2.0, 1.0, 2.0], 1.5) == 2
    assert count_crossings([1.5, 1.0, 0.5], 1.5) == 1
    assert count_crossings([2.0, 1.5, 2.0], 1.5) == 1
    assert count_crossings([2.0, 3.0], 1.5) == 0


def test_curves_cases_c_below_r1(tmp_path):
    w = make_wstate([1, 2, 3, 4, 4], normalize=True)
    t = curve_table(w, w.c_max, 5 * w.c_max, 2000)
    assert count_crossings(t[:, 1], 3.0) == 1
    assert count_crossings(t[:, 2], 3.0) == 0


def test_curves_boundary_touch():
    w = boundary_state([1, 2, 3, 4])
    t = curve_table(w, w.c_max, 5 * w.c_max, 2000)
    assert count_crossings(t[:, 1], 3.0) == 1
    assert count_crossings(t[:, 2], 3.0) == 1
    assert abs(t[0, 1] - 3.0) <= 1e-9 and abs(t[0, 2] - 3.0) <= 1e-9


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wgeom", "measure", "--coeffs", "0.6,0.8"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["g"] == 0.8


def test_log_env(monkeypatch):
    monkeypatch.setenv("WGEOM_LOG", "info")
    proc = subprocess.run(
        [sys.executable, "-m", "wgeom", "measure", "--coeffs", "0.6,0.8"],
        capture_output=True, text=True, check=False,
        env={**__import__("os").environ, "WGEOM_LOG": "info"},
    )
    assert "class=slightly_entangled" in proc.stderr
