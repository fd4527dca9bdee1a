"""Closed form versus the power-method oracle across qubit counts.

Prints one row per n: trial count, class counts, worst |g - g_oracle| and time.
"""
import argparse
import time
from collections import Counter

import numpy as np

from wgeom import hopm_maximize, nearest_product
from wgeom.states import random_wstate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--restarts", type=int, default=50)
    ap.add_argument("--max-iters", type=int, default=2000)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'n':>3} {'trials':>6} {'max|dg|':>10} {'secs':>6}  classes")
    for n in range(args.n_min, args.n_max + 1):
        start = time.perf_counter()
        counts, worst = Counter(), 0.0
        for t in range(args.trials):
            w = random_wstate(rng, n)
            res = nearest_product(w)
            seed = int(np.random.SeedSequence([args.seed, n, t]).generate_state(1)[0])
            orc = hopm_maximize(w, args.restarts, args.max_iters, seed=seed)
            worst = max(worst, abs(res.g - orc.g_est))
            counts[res.cls.value] += 1
        secs = time.perf_counter() - start
        print(f"{n:>3} {args.trials:>6} {worst:>10.2e} {secs:>6.1f}  {dict(counts)}")


if __name__ == "__main__":
    main()
