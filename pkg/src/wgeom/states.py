"""Samplers and constructors for test and experiment states."""
from __future__ import annotations

import math

import numpy as np

from .branch import r_crit
from .core import WState, make_wstate
from .duality import in_region


def random_wstate(rng: np.random.Generator, n: int) -> WState:
    """Squared coefficients uniform on the probability simplex."""
    return make_wstate(np.sqrt(rng.dirichlet(np.ones(n))))


def random_slightly_entangled(rng: np.random.Generator, n: int) -> WState:
    """Random state conditioned on c_max^2 > 1/2.

    c_max^2 is drawn uniformly in (1/2, 1); the remaining weight is split
    uniformly over the simplex.
    """
    top = rng.uniform(0.5, 1.0)
    while top <= 0.5:
        top = rng.uniform(0.5, 1.0)
    rest = (1.0 - top) * rng.dirichlet(np.ones(n - 1))
    sq = np.append(rest, top)
    rng.shuffle(sq)
    return make_wstate(np.sqrt(sq), normalize=True)


def random_highly_entangled(rng: np.random.Generator, n: int, margin: float = 0.0) -> WState:
    """Rejection sample: c_max^2 < 1/2 - margin and every coefficient nonzero."""
    if n < 3:
        raise ValueError("two-qubit W states are never highly entangled")
    while True:
        sq = rng.dirichlet(np.ones(n))
        if sq.max() < 0.5 - margin and sq.min() > 0:
            return make_wstate(np.sqrt(sq))


def random_region_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    """Uniform on the positive orthant of the unit sphere, rejected to the open dual region."""
    while True:
        g = np.abs(rng.standard_normal(n))
        x = g / math.sqrt(float(np.sum(g**2)))
        if in_region(x):
            return x


def symmetric_wstate(n: int) -> WState:
    return make_wstate(np.full(n, 1.0 / math.sqrt(n)), normalize=True)


def _r1_of(head: np.ndarray) -> float:
    # r1 only sees the n-1 smallest amplitudes; pad with a copy of the maximum
    return r_crit(make_wstate(np.append(head, head.max()), normalize=True))[0] * math.sqrt(
        float(np.sum(head**2) + head.max() ** 2)
    )


def boundary_state(base, tol: float = 1e-10, max_iter: int = 50) -> WState:
    """State with c_n = r1(c_1, ..., c_{n-1}) for the given first n-1 amplitudes.

    Alternates "set c_n to r1" and "renormalize" until |c_n - r1| <= tol.
    """
    head = np.asarray(base, dtype=float)
    for _ in range(max_iter):
        c = np.append(head, _r1_of(head))
        c = c / math.sqrt(float(np.sum(c**2)))
        head = c[:-1]
        w = make_wstate(c)
        if abs(c[-1] - r_crit(w)[0]) <= tol:
            return w
    raise RuntimeError("boundary construction did not settle")


def shared_state(base) -> WState:
    """State with c_n = r2 = sqrt(c_1^2 + ... + c_{n-1}^2), i.e. c_n^2 = 1/2."""
    c = np.asarray(base, dtype=float)
    return make_wstate(np.append(c, math.sqrt(float(np.sum(c**2)))), normalize=True)
