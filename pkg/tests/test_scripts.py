import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


@pytest.mark.parametrize(
    "argv",
    [
        ["branch_curves.py", "--samples", "500"],
        ["shared_limit.py", "--deltas", "1e-2,1e-3"],
        ["verify_all.py", "--n-min", "3", "--n-max", "4", "--trials", "3", "--restarts", "5"],
    ],
)
def test_script_runs(argv, tmp_path):
    if argv[0] == "branch_curves.py":
        argv = argv + ["--out-dir", str(tmp_path)]
    proc = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip()
    if argv[0] == "branch_curves.py":
        assert len(list(tmp_path.glob("*.csv"))) == 4
        assert "1/0" in proc.stdout and "0/0" in proc.stdout
