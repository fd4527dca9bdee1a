"""Tabulate f_+ and f_- against r, and count their crossings of n - 2."""
from __future__ import annotations

import numpy as np

from .branch import f_eval
from .core import WState
from .errors import DomainError

COLUMNS = ("r", "f_plus", "f_minus", "target")


def curve_table(w: WState, r_min: float, r_max: float, samples: int) -> np.ndarray:
    """Rows (r, f_plus, f_minus, n - 2) at uniform spacing in [r_min, r_max]."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if r_min < w.c_max:
        raise DomainError(f"r_min={r_min!r} is below c_max={w.c_max!r}")
    if r_max <= r_min:
        raise ValueError("r_max must exceed r_min")
    rs = np.linspace(r_min, r_max, samples)
    rs[0] = r_min
    out = np.empty((samples, 4))
    out[:, 0] = rs
    out[:, 1] = [f_eval(r, w, "plus") for r in rs]
    out[:, 2] = [f_eval(r, w, "minus") for r in rs]
    out[:, 3] = w.n - 2
    return out


def count_crossings(values, target: float, atol: float = 1e-9) -> int:
    """Number of places where the sampled curve meets ``target``.

    A sign change between neighbours counts once; a run of samples within
    ``atol`` of the target (a touch) also counts once.
    """
    d = np.asarray(values, dtype=float) - target
    signs = np.where(np.abs(d) <= atol, 0, np.sign(d)).astype(int)
    count = 0
    prev = None
    in_touch = False
    for sgn in signs:
        if sgn == 0:
            if not in_touch:
                count += 1
                in_touch = True
            continue
        if prev is not None and prev != sgn and not in_touch:
            count += 1
        in_touch = False
        prev = sgn
    return count
