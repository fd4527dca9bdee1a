"""Branch functions f_0, f_+, f_-, the critical values r1 <= r2, and the length r.

With a_k = c_k^2 / r^2 and s_k = sqrt(1 - a_k),

    f_0(r) = s_1 + ... + s_{n-1}
    f_pm(r) = f_0(r) +- s_n

and the nontrivial stationary points satisfy f_+(r) = n - 2 or f_-(r) = n - 2.

The solver does not bisect on r directly. Writing r = c_n / sin(2 t) with t
the angle of the largest-coefficient qubit, both branch equations become the
single equation

    F(t) = sum_{k<n} (s_k - 1) + 1 - cos(2 t) = 0,   t in (0, pi/2),

with the plus branch on [pi/4, pi/2) and the minus branch on (0, pi/4].
F = 2 sin^2(t) G(t), where G(0) = 1 - r2^2/c_n^2 and G(pi/2) = 1, so the minus
bracket is finite even as r -> infinity near the shared surface, and the
square-root singularity at r = c_n disappears.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import EntanglementClass, WState
from .errors import BracketFailure, DegenerateState, DomainError

SHARED_TOL = 1e-9
BOUNDARY_RTOL = 1e-12
QUARTER_PI = math.pi / 4


class Branch(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class BranchSolution:
    branch: Branch
    r: float
    r1: float
    r2: float
    residual: float
    # angle of the largest-coefficient qubit; nan on the trivial branch
    theta_last: float = math.nan


def f_eval(r: float, w: WState, variant: str) -> float:
    """Evaluate f_0 ("zero"), f_+ ("plus") or f_- ("minus") at r."""
    variant = getattr(variant, "value", variant)
    c = w.coeffs
    lower = c[-2] if variant == "zero" else c[-1]
    if r < lower or r <= 0:
        raise DomainError(f"r={r!r} is below the domain bound {lower!r} for f_{variant}")
    f0 = float(np.sum(np.sqrt(np.maximum(1.0 - (c[:-1] / r) ** 2, 0.0))))
    if variant == "zero":
        return f0
    last = math.sqrt(max(1.0 - (c[-1] / r) ** 2, 0.0))
    if variant == "plus":
        return f0 + last
    if variant == "minus":
        return f0 - last
    raise ValueError(f"unknown variant {variant!r}")


def f_excess(r: float, w: WState, variant: str) -> float:
    """f_variant(r) - (n - 2) without cancellation, for r well above c_n."""
    variant = getattr(variant, "value", variant)
    c = w.coeffs
    a = (c[:-1] / r) ** 2
    base = 1.0 - float(np.sum(a / (1.0 + np.sqrt(1.0 - a))))
    if variant == "zero":
        return base
    last = math.sqrt(max(1.0 - (c[-1] / r) ** 2, 0.0))
    return base + last if variant == "plus" else base - last


def _bisect(fn, lo: float, hi: float) -> float:
    """Bisect fn (negative at lo, positive at hi) down to floating-point resolution."""
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return lo if abs(fn(lo)) <= abs(fn(hi)) else hi
        if fn(mid) > 0:
            hi = mid
        else:
            lo = mid


def r_crit(w: WState) -> tuple[float, float]:
    """Return (r1, r2): the root of f_0 = n - 2 and sqrt(c_1^2 + ... + c_{n-1}^2)."""
    if w.n_nonzero < 2:
        raise DegenerateState("r1 needs at least two nonzero coefficients")
    c = w.coeffs
    r2 = math.sqrt(float(np.sum(c[:-1] ** 2)))
    cm = c[-2]
    rest = (c[:-2] / cm) ** 2

    # parametrize by s = sqrt(1 - c_{n-1}^2 / r^2) in [0, 1)
    one_minus_rest = (cm - c[:-2]) * (cm + c[:-2]) / cm**2

    def g0(s):
        a = rest * (1.0 - s * s)
        return s - float(np.sum(a / (1.0 + np.sqrt(one_minus_rest + rest * s * s))))

    if g0(0.0) >= 0.0:
        return float(cm), r2
    s = _bisect(g0, 0.0, 1.0)
    r1 = cm / math.sqrt((1.0 - s) * (1.0 + s))
    return float(min(r1, r2)), r2


def classify(w: WState) -> EntanglementClass:
    if w.n_nonzero == 1:
        return EntanglementClass.PRODUCT
    r1, r2 = r_crit(w)
    cn = w.c_max
    if abs(cn - r2) <= SHARED_TOL:
        return EntanglementClass.SHARED
    if cn > r2:
        return EntanglementClass.SLIGHTLY
    if cn <= r1 * (1.0 + BOUNDARY_RTOL):
        return EntanglementClass.HIGHLY_SYMMETRIC
    return EntanglementClass.HIGHLY_ASYMMETRIC


def radicands(c: np.ndarray, t: float) -> np.ndarray:
    """1 - (c_k/c_n)^2 sin^2(2t) for k < n, accurate when c_k ~ c_n and t ~ pi/4."""
    cn = c[-1]
    head = c[:-1]
    one_minus_b = (cn - head) * (cn + head) / cn**2
    return one_minus_b + (head / cn) ** 2 * math.cos(2 * t) ** 2


def _angle_functions(c: np.ndarray):
    """F, G and dF/dt for the last-qubit angle t (see module docstring)."""
    b = (c[:-1] / c[-1]) ** 2

    def F(t):
        a = b * math.sin(2 * t) ** 2
        return 2.0 * math.sin(t) ** 2 - float(np.sum(a / (1.0 + np.sqrt(radicands(c, t)))))

    def G(t):
        return 1.0 - float(np.sum(2.0 * b * math.cos(t) ** 2 / (1.0 + np.sqrt(radicands(c, t)))))

    def dF(t):
        s2t, c2t = math.sin(2 * t), math.cos(2 * t)
        sk = np.sqrt(radicands(c, t))
        if np.any(sk < 1e-8):
            return math.nan
        return float(np.sum(-2.0 * b * s2t * c2t / sk)) + 2.0 * s2t

    return F, G, dF


def _solve_angle(c: np.ndarray, branch: Branch) -> tuple[float, float]:
    F, G, dF = _angle_functions(c)
    f4 = F(QUARTER_PI)
    # c_n = r1: both branches meet at t = pi/4 (r = c_n)
    if abs(f4) <= 1e-14:
        return QUARTER_PI, abs(f4)
    if branch is Branch.PLUS:
        lo, hi = QUARTER_PI, math.pi / 2
        if 0.0 < f4 <= 1e-10:
            return QUARTER_PI, f4
    else:
        lo, hi = 0.0, QUARTER_PI
        if -1e-10 <= f4 < 0.0:
            return QUARTER_PI, -f4
    if not (G(lo) < 0.0 < G(hi)):
        raise BracketFailure(
            f"no sign change for the {branch.value} branch on [{lo:.6g}, {hi:.6g}]: "
            f"G={G(lo):.3e}, {G(hi):.3e}"
        )
    t = _bisect(G, lo, hi)
    # Newton polish on F; keep a step only if it stays in the bracket and helps
    for _ in range(3):
        d = dF(t)
        if not math.isfinite(d) or d == 0.0:
            break
        t_new = t - F(t) / d
        if not (lo < t_new < hi) or abs(F(t_new)) >= abs(F(t)):
            break
        t = t_new
    return t, abs(F(t))


def solve_branch(w: WState, branch: Branch) -> BranchSolution:
    """Solve one branch equation regardless of the classification.

    Raises BracketFailure when that branch has no root for this state.
    """
    branch = Branch(branch)
    if branch is Branch.TRIVIAL:
        raise ValueError("solve_branch needs PLUS or MINUS")
    r1, r2 = r_crit(w)
    t, res = _solve_angle(np.asarray(w.coeffs), branch)
    r = w.c_max / math.sin(2 * t)
    return BranchSolution(branch, float(r), r1, r2, float(res), float(t))


def solve_r(w: WState) -> BranchSolution:
    cls = classify(w)
    if cls is EntanglementClass.PRODUCT:
        return BranchSolution(Branch.TRIVIAL, math.inf, math.nan, math.nan, 0.0)
    if not cls.is_highly:
        r1, r2 = r_crit(w)
        return BranchSolution(Branch.TRIVIAL, math.inf, r1, r2, 0.0)
    branch = Branch.PLUS if cls is EntanglementClass.HIGHLY_SYMMETRIC else Branch.MINUS
    return solve_branch(w, branch)
