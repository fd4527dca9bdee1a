"""Maximal product overlap, geometric measure and nearest product state of a W state."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .branch import Branch, BranchSolution, classify, radicands, solve_r
from .core import (
    HALF_PI,
    EntanglementClass,
    ProductState,
    UnitVector,
    WState,
    sincos,
    w_overlap_real,
)
from .errors import BranchMismatch, DimensionMismatch, InconsistentInputs


@dataclass(frozen=True)
class Diagnostics:
    stationarity: float
    constraint: float
    # max - min of sin(2 theta_k)/c_k over nonzero c_k; 0 on the trivial branch
    ratio_spread: float
    # |g - g from the sin^2 form|; 0 on the trivial branch
    g_crosscheck: float


@dataclass(frozen=True, eq=False)
class MeasureResult:
    g: float
    g_squared: float
    e_g: float
    cls: EntanglementClass
    branch: BranchSolution
    nearest: ProductState
    dual: UnitVector | None
    diagnostics: Diagnostics


def _sorted_angles(c: np.ndarray, sol: BranchSolution):
    """Angles plus their sines and cosines, the latter free of the rounding in theta."""
    cn = c[-1]
    if math.isfinite(sol.theta_last):
        t_last = sol.theta_last
    else:
        s_n = math.sqrt(max(1.0 - (cn / sol.r) ** 2, 0.0))
        sign = -1.0 if sol.branch is Branch.PLUS else 1.0
        t_last = math.acos(math.sqrt(0.5 * (1.0 + sign * s_n)))
    # a_k = c_k^2 / r^2 with r = c_n / sin(2 t_last)
    a = (c[:-1] * math.sin(2 * t_last) / cn) ** 2
    s = np.sqrt(radicands(c, t_last))
    # cos^2 = (1 - s)/2 = a / (2 (1 + s)), sin^2 = (1 + s)/2
    sin_t = np.append(np.sqrt(0.5 * (1.0 + s)), math.sin(t_last))
    cos_t = np.append(np.sqrt(a / (2.0 * (1.0 + s))), math.cos(t_last))
    return np.arctan2(sin_t, cos_t), sin_t, cos_t


def thetas_from_r(w: WState, sol: BranchSolution) -> ProductState:
    """Angles of the nontrivial stationary product state, in the user's qubit order."""
    if sol.branch is Branch.TRIVIAL:
        raise BranchMismatch("the trivial branch has no angle solution from r")
    return ProductState(w.to_user_order(_sorted_angles(np.asarray(w.coeffs), sol)[0]))


def g_from_thetas(p: ProductState, r: float, norm_sq: float = 1.0) -> float:
    """g = 2 r prod sin(theta_k), checked against the y_k = sin^2(theta_k) form.

    The second form needs the W state's squared norm, which defaults to 1.
    """
    # sorted so that permuted inputs give bit-identical g
    s = np.sort(sincos(p.thetas)[0])
    g = 2.0 * r * float(np.prod(s))
    y = s**2
    denom = float(np.sum(y * (1.0 - y)))
    if denom > 0.0:
        g_alt = math.sqrt(norm_sq * float(np.prod(y)) / denom)
        if abs(g - g_alt) > 1e-9:
            raise InconsistentInputs(f"g={g!r} but the sin^2 form gives {g_alt!r}")
    return g


def _g_crosscheck(p: ProductState, r: float, norm_sq: float) -> float:
    s = np.sort(sincos(p.thetas)[0])
    y = s**2
    denom = float(np.sum(y * (1.0 - y)))
    if denom <= 0.0:
        return 0.0
    return abs(2.0 * r * float(np.prod(s)) - math.sqrt(norm_sq * float(np.prod(y)) / denom))


def stationarity_residual(p: ProductState, w: WState, g: float) -> float:
    """max_k || <u_1 .. (u_k omitted) .. u_n | W> - g |u_k> ||."""
    if p.n != w.n:
        raise DimensionMismatch(f"product state has {p.n} qubits, W state has {w.n}")
    c = w.user_coeffs
    s, co = sincos(p.thetas)
    phase = complex(math.cos(p.phi), math.sin(p.phi)) if p.phi else 1.0
    worst = 0.0
    idx = np.arange(w.n)
    for k in range(w.n):
        keep = idx != k
        # |0>: one excitation among the other qubits; |1>: excitation on qubit k
        v0 = phase.conjugate() * w_overlap_real(c[keep], s[keep], co[keep])
        v1 = c[k] * float(np.prod(s[keep]))
        d0 = v0 - g * s[k]
        d1 = v1 - g * phase * co[k]
        worst = max(worst, math.hypot(abs(d0), abs(d1)))
    return worst


def nearest_product(w: WState) -> MeasureResult:
    cls = classify(w)
    sol = solve_r(w)
    c = np.asarray(w.coeffs)
    if sol.branch is Branch.TRIVIAL:
        # basis product state picking out the largest coefficient
        th = np.full(w.n, HALF_PI)
        th[-1] = 0.0
        nearest = ProductState(w.to_user_order(th))
        g = float(c[-1])
        dual = None
        ratio_spread = 0.0
        crosscheck = 0.0
    else:
        th, sin_t, cos_t = _sorted_angles(c, sol)
        nearest = ProductState(w.to_user_order(th))
        g = g_from_thetas(nearest, sol.r, w.norm_sq)
        crosscheck = _g_crosscheck(nearest, sol.r, w.norm_sq)
        nz = c > 0
        ratios = 2.0 * sin_t[nz] * cos_t[nz] / c[nz]
        ratio_spread = float(ratios.max() - ratios.min())
        dual = UnitVector(np.cos(nearest.thetas))
    diag = Diagnostics(
        stationarity=stationarity_residual(nearest, w, g),
        constraint=abs(nearest.cos_sq_sum() - 1.0),
        ratio_spread=ratio_spread,
        g_crosscheck=crosscheck,
    )
    e_g = -2.0 * math.log(g) if g < 1.0 else 0.0
    return MeasureResult(g, g * g, e_g, cls, sol, nearest, dual, diag)
