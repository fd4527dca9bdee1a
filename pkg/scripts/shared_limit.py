"""Approach the shared surface along c = (s, s, sqrt(1/2 - delta)).

g^2 should rise toward 1/2 while r diverges and 2 r sin(theta_n) tends to c_n.
"""
import argparse
import math

from wgeom import make_wstate, nearest_product


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--deltas", default="1e-1,1e-2,1e-3,1e-4,1e-5,1e-6")
    args = ap.parse_args()

    print(f"{'delta':>8} {'class':>28} {'r':>14} {'g^2':>18} {'|2 r sin th_n - c_n|':>22}")
    for delta in (float(d) for d in args.deltas.split(",")):
        s = math.sqrt((0.5 + delta) / 2)
        w = make_wstate([s, s, math.sqrt(0.5 - delta)])
        res = nearest_product(w)
        th_n = w.to_sorted_order(res.nearest.thetas)[-1]
        gap = abs(2 * res.branch.r * math.sin(th_n) - w.c_max)
        print(f"{delta:>8.0e} {res.cls.value:>28} {res.branch.r:>14.6g} {res.g_squared:>18.15f} {gap:>22.3e}")


if __name__ == "__main__":
    main()
