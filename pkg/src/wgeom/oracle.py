"""Brute-force maximization of |<u_1 ... u_n|W>| over product states.

Nothing here uses the branch construction. The main tool is the higher-order
power method (alternating updates): each local state is replaced by the
normalized partial contraction of W with all the other local states. Local
states are full complex 2-vectors.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import WState
from .errors import DimensionMismatch, TooLarge

DEFAULT_RESTARTS = 50
DEFAULT_MAX_ITERS = 500
SWEEP_TOL = 1e-13


@dataclass(frozen=True, eq=False)
class OracleResult:
    g_est: float
    best_product: np.ndarray  # (n, 2) complex, unit rows
    restarts_used: int
    converged_fraction: float
    seed: int
    restart_g: np.ndarray  # final overlap per restart
    restart_states: np.ndarray  # (restarts, n, 2)


def _partials(U: np.ndarray, c: np.ndarray, k: int) -> np.ndarray:
    """<u_1 .. (u_k omitted) .. u_n | W> for every restart: shape (R, 2)."""
    a = U[:, :, 0].conj()
    bc = U[:, :, 1].conj() * c
    a = a.copy()
    a[:, k] = 1.0
    bc[:, k] = 0.0
    R, n = a.shape
    pre = np.ones((R, n), dtype=complex)
    suf = np.ones((R, n), dtype=complex)
    if n > 1:
        pre[:, 1:] = np.cumprod(a[:, :-1], axis=1)
        suf[:, :-1] = np.cumprod(a[:, :0:-1], axis=1)[:, ::-1]
    v0 = np.sum(bc * pre * suf, axis=1)
    v1 = c[k] * pre[:, -1] * a[:, -1]
    return np.stack([v0, v1], axis=1)


def product_overlaps(U: np.ndarray, c) -> np.ndarray:
    """|<u|W>| for a stack of product states U with shape (R, n, 2)."""
    c = np.asarray(c, dtype=float)
    v = _partials(U, c, 0)
    return np.abs(np.sum(U[:, 0, :].conj() * v, axis=1))


def hopm_run(c, init: np.ndarray, max_iters: int = DEFAULT_MAX_ITERS, tol: float = SWEEP_TOL):
    """Run alternating updates from the given initial product states.

    ``c`` is the coefficient vector in qubit order, ``init`` has shape
    (R, n, 2). Returns (final states, per-sweep overlaps of shape
    (sweeps + 1, R), converged mask).
    """
    c = np.asarray(c, dtype=float)
    U = np.array(init, dtype=complex)
    if U.ndim == 2:
        U = U[None]
    if U.shape[1] != len(c):
        raise DimensionMismatch(f"initial states have {U.shape[1]} qubits, W state has {len(c)}")
    U /= np.linalg.norm(U, axis=2, keepdims=True)
    R, n, _ = U.shape
    g = product_overlaps(U, c)
    history = [g]
    converged = np.zeros(R, dtype=bool)
    for _ in range(max_iters):
        for k in range(n):
            v = _partials(U, c, k)
            nv = np.linalg.norm(v, axis=1)
            ok = nv > 0
            U[ok, k, :] = v[ok] / nv[ok, None]
        g_new = product_overlaps(U, c)
        converged |= (g_new - g) <= tol
        g = g_new
        history.append(g)
        if converged.all():
            break
    return U, np.array(history), converged


def random_local_states(rng: np.random.Generator, n: int) -> np.ndarray:
    """n Haar-random qubit states (uniform on the Bloch sphere)."""
    z = rng.standard_normal((n, 2)) + 1j * rng.standard_normal((n, 2))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def initial_states(seed: int, n: int, restarts: int) -> np.ndarray:
    """One independent generator stream per restart, spawned from ``seed``."""
    children = np.random.SeedSequence(seed).spawn(restarts)
    return np.stack([random_local_states(np.random.default_rng(s), n) for s in children])


def hopm_maximize(
    w: WState,
    restarts: int = DEFAULT_RESTARTS,
    max_iters: int = DEFAULT_MAX_ITERS,
    seed: int = 0,
    tol: float = SWEEP_TOL,
) -> OracleResult:
    if restarts < 1 or max_iters < 1:
        raise ValueError("restarts and max_iters must be >= 1")
    c = w.user_coeffs
    U, history, converged = hopm_run(c, initial_states(seed, w.n, restarts), max_iters, tol)
    g_all = history[-1]
    best = int(np.argmax(g_all))
    return OracleResult(
        g_est=float(min(g_all[best], 1.0)),
        best_product=U[best],
        restarts_used=restarts,
        converged_fraction=float(converged.mean()),
        seed=seed,
        restart_g=g_all,
        restart_states=U,
    )


def canonical_local_states(U: np.ndarray) -> np.ndarray:
    """Fix the phase freedom of a product state (n, 2).

    Each |0> amplitude is made real nonnegative (or the |1> amplitude when the
    |0> one vanishes); then the common relative phase of the |1> amplitudes is
    removed using the qubit with the largest |1> weight.
    """
    U = np.array(U, dtype=complex)
    ref = np.where(np.abs(U[:, 0]) > 1e-12, U[:, 0], U[:, 1])
    U *= (np.abs(ref) / ref)[:, None]
    j = int(np.argmax(np.abs(U[:, 1])))
    if abs(U[j, 0]) > 1e-12 and abs(U[j, 1]) > 1e-12:
        ph = U[j, 1] / abs(U[j, 1])
        U[:, 1] *= ph.conjugate()
    return U


def nearest_state_spread(res: OracleResult, g_tol: float = 1e-9) -> float:
    """Largest distance between canonical optimal states among the best restarts."""
    top = np.flatnonzero(res.restart_g >= res.restart_g.max() - g_tol)
    can = [canonical_local_states(res.restart_states[i]) for i in top]
    return max((float(np.max(np.abs(can[0] - s))) for s in can), default=0.0)


def grid_search(w: WState, resolution: int) -> float:
    """Exhaustive maximum of the real-angle overlap on a uniform grid in [0, pi/2]^n."""
    n = w.n
    if n > 4 or resolution > 200 or resolution < 1:
        raise TooLarge(f"grid search is limited to n <= 4 and 1 <= resolution <= 200 (got n={n}, res={resolution})")
    t = np.linspace(0.0, math.pi / 2, resolution + 1)
    s, co = np.sin(t), np.cos(t)
    s[-1], co[-1] = 1.0, 0.0
    c = w.user_coeffs
    # running product of sines P and partial overlap Q over the first qubits
    P = s.copy()
    Q = c[0] * co
    for k in range(1, n - 1):
        Q = np.add.outer(Q, np.zeros_like(t)) * s + np.multiply.outer(P, co) * c[k]
        P = np.multiply.outer(P, s)
        Q, P = Q.ravel(), P.ravel()
    best = -math.inf
    for sk, ck in zip(s, co):
        best = max(best, float(np.max(Q * sk + c[-1] * ck * P)))
    return best


def statevector_overlap(local_states, w: WState) -> complex:
    """<u_1 ... u_n | W> from dense 2^n vectors (qubit 1 is the most significant bit)."""
    L = np.asarray(local_states, dtype=complex)
    n = w.n
    if L.shape != (n, 2):
        raise DimensionMismatch(f"expected local states of shape ({n}, 2), got {L.shape}")
    if n > 20:
        raise TooLarge("dense overlap is limited to n <= 20")
    psi = np.zeros(2**n, dtype=complex)
    c = w.user_coeffs
    for k in range(n):
        psi[1 << (n - 1 - k)] = c[k]
    prod = L[0]
    for k in range(1, n):
        prod = np.kron(prod, L[k])
    return complex(np.vdot(prod, psi))


def corner_products(n: int):
    """All 2^n computational-basis product states as (n, 2) arrays."""
    for bits in itertools.product((0, 1), repeat=n):
        U = np.zeros((n, 2), dtype=complex)
        U[np.arange(n), bits] = 1.0
        yield U
