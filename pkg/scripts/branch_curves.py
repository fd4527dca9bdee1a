"""Write f_plus / f_minus curve tables for four five-qubit states.

The states share the first four amplitudes (1, 2, 3, 4) and differ in the
largest one: below r1, at r1, between r1 and r2, and at r2. One CSV per case
plus a printed crossing count against n - 2 = 3.
"""
import argparse
import csv
import math
from pathlib import Path

import numpy as np

from wgeom import make_wstate, r_crit
from wgeom.curves import COLUMNS, count_crossings, curve_table
from wgeom.states import boundary_state, shared_state


def cases(base):
    base = np.asarray(base, dtype=float)
    scale = math.sqrt(float(np.sum(base**2) + base.max() ** 2))
    r1, r2 = (v * scale for v in r_crit(make_wstate(np.append(base, base.max()), normalize=True)))
    return {
        "below_r1": make_wstate(np.append(base, 0.5 * (base.max() + r1)), normalize=True),
        "at_r1": boundary_state(base),
        "between": make_wstate(np.append(base, 0.5 * (r1 + r2)), normalize=True),
        "at_r2": shared_state(base),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results/curves")
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--r-max-factor", type=float, default=4.0, help="r_max = factor * max(r2, c_max)")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, w in cases([1.0, 2.0, 3.0, 4.0]).items():
        r1, r2 = r_crit(w)
        table = curve_table(w, w.c_max, args.r_max_factor * max(r2, w.c_max), args.samples)
        path = out / f"{name}.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(COLUMNS)
            writer.writerows(table.tolist())
        plus = count_crossings(table[:, 1], w.n - 2)
        minus = count_crossings(table[:, 2], w.n - 2)
        print(f"{name:9s} c_n={w.c_max:.6f} r1={r1:.6f} r2={r2:.6f}  crossings f+/f-: {plus}/{minus}  -> {path}")


if __name__ == "__main__":
    main()
