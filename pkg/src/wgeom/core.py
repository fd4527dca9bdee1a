"""Canonical W states, real product states and unit vectors.

A generalized n-qubit W state is

    |W> = c_1|10...0> + c_2|01...0> + ... + c_n|00...1>

and only the moduli of the c_k matter for the product overlap, so they are
stored as nonnegative reals. Product states are parametrized by angles,
``|u_k> = sin(theta_k)|0> + exp(i phi) cos(theta_k)|1>``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import AllZero, DimensionMismatch, DimensionTooSmall, NotNormalized

ZERO_TOL = 1e-12
NORM_TOL = 1e-9

HALF_PI = math.pi / 2


class EntanglementClass(str, enum.Enum):
    PRODUCT = "product"
    SLIGHTLY = "slightly_entangled"
    SHARED = "shared"
    HIGHLY_SYMMETRIC = "highly_entangled_symmetric"
    HIGHLY_ASYMMETRIC = "highly_entangled_asymmetric"

    @property
    def is_highly(self) -> bool:
        return self in (EntanglementClass.HIGHLY_SYMMETRIC, EntanglementClass.HIGHLY_ASYMMETRIC)


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class WState:
    """W-state amplitudes, stored ascending.

    ``coeffs[i] == user_coeffs[perm[i]]``; ``user_coeffs`` restores the order
    the caller supplied.
    """

    coeffs: np.ndarray
    perm: np.ndarray
    norm_sq: float

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def c_max(self) -> float:
        return float(self.coeffs[-1])

    @property
    def n_nonzero(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    @property
    def user_coeffs(self) -> np.ndarray:
        out = np.empty(self.n)
        out[self.perm] = self.coeffs
        return out

    def to_user_order(self, sorted_values) -> np.ndarray:
        out = np.empty(self.n)
        out[self.perm] = sorted_values
        return out

    def to_sorted_order(self, user_values) -> np.ndarray:
        return np.asarray(user_values, dtype=float)[self.perm]


def make_wstate(raw: Sequence[complex], normalize: bool = False) -> WState:
    """Build a WState from arbitrary complex/signed amplitudes.

    Phases are stripped (they can be absorbed into local redefinitions of
    |1_k>), amplitudes below 1e-12 become exact zeros, and the result is
    sorted ascending with a stable sort.
    """
    mod = np.abs(np.asarray(raw, dtype=complex).ravel())
    if mod.size < 2:
        raise DimensionTooSmall(f"a W state needs n >= 2 qubits, got {mod.size}")
    if not np.all(np.isfinite(mod)):
        raise NotNormalized("coefficients must be finite")
    if not np.any(mod > 0):
        raise AllZero("all coefficients are zero")
    if normalize:
        mod = mod / math.sqrt(float(np.sum(mod**2)))
    mod[mod < ZERO_TOL] = 0.0
    if not np.any(mod > 0):
        raise AllZero("all coefficients are below the zero threshold")
    norm_sq = float(np.sum(mod**2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise NotNormalized(f"sum of squared moduli is {norm_sq!r}, expected 1 (pass normalize=True)")
    perm = np.argsort(mod, kind="stable")
    p = np.array(perm, dtype=np.intp)
    p.setflags(write=False)
    return WState(coeffs=_frozen(mod[perm]), perm=p, norm_sq=norm_sq)


def sincos(thetas) -> tuple[np.ndarray, np.ndarray]:
    """sin and cos with the endpoints 0 and pi/2 snapped to exact 0/1."""
    t = np.asarray(thetas, dtype=float)
    s, c = np.sin(t), np.cos(t)
    s = np.where(t == 0.0, 0.0, np.where(t == HALF_PI, 1.0, s))
    c = np.where(t == 0.0, 1.0, np.where(t == HALF_PI, 0.0, c))
    return s, c


@dataclass(frozen=True, eq=False)
class ProductState:
    """Angles in [0, pi/2] and a global phase for sin|0> + e^{i phi} cos|1>."""

    thetas: np.ndarray
    phi: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "thetas", _frozen(self.thetas))

    @property
    def n(self) -> int:
        return len(self.thetas)

    def amplitudes(self) -> np.ndarray:
        """(n, 2) complex array of local states."""
        s, c = sincos(self.thetas)
        out = np.empty((self.n, 2), dtype=complex)
        out[:, 0] = s
        out[:, 1] = c * np.exp(1j * self.phi) if self.phi else c
        return out

    def cos_sq_sum(self) -> float:
        _, c = sincos(self.thetas)
        return float(np.sum(c**2))


@dataclass(frozen=True, eq=False)
class UnitVector:
    x: np.ndarray = field()

    def __post_init__(self):
        object.__setattr__(self, "x", _frozen(self.x))

    @property
    def n(self) -> int:
        return len(self.x)

    @property
    def norm_error(self) -> float:
        return abs(float(np.sum(self.x**2)) - 1.0)


def w_overlap_real(c, sin_t, cos_t) -> float:
    """sum_k c_k cos_k prod_{j != k} sin_j, using prefix/suffix products (no division)."""
    c = np.asarray(c, dtype=float)
    sin_t = np.asarray(sin_t, dtype=float)
    n = len(c)
    pre = np.ones(n)
    suf = np.ones(n)
    if n > 1:
        pre[1:] = np.cumprod(sin_t[:-1])
        suf[:-1] = np.cumprod(sin_t[::-1][:-1])[::-1]
    return float(np.sum(c * np.asarray(cos_t) * pre * suf))


def overlap_product_w(p: ProductState, w: WState) -> float:
    """|<u_1 ... u_n|W>| for a product state given in the user's qubit order."""
    if p.n != w.n:
        raise DimensionMismatch(f"product state has {p.n} qubits, W state has {w.n}")
    s, c = sincos(p.thetas)
    return w_overlap_real(w.user_coeffs, s, c)
