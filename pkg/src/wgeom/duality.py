"""Bijection between highly entangled W states, unit vectors and nearest product states.

x_k = cos(theta_k) for the nearest product state. Going back, r^2 is
1 / sum_k sin^2(2 theta_k) for a normalized state and c_k = r sin(2 theta_k).

The component with the largest x plays the role of the largest coefficient,
so all maps work in the caller's component order.
"""
from __future__ import annotations

import math

import numpy as np

from .core import ProductState, UnitVector, WState, make_wstate
from .errors import NotHighlyEntangled, RegionViolation
from .measure import nearest_product

REGION_TOL = 1e-12
UNIT_TOL = 1e-9
INV_SQRT2 = 1.0 / math.sqrt(2.0)


def in_region(x) -> bool:
    """0 < x_k < 1/sqrt(2) for all but the largest component, 0 < x_max < 1."""
    x = np.sort(np.asarray(x, dtype=float))
    if len(x) < 2 or x[0] <= REGION_TOL or x[-1] >= 1.0 - REGION_TOL:
        return False
    return bool(x[-2] < INV_SQRT2 - REGION_TOL)


def _check_unit(x: np.ndarray) -> None:
    err = abs(float(np.sum(x**2)) - 1.0)
    if err > UNIT_TOL:
        raise RegionViolation(f"|x|^2 differs from 1 by {err:.3e}")


def w_to_unit_vector(w: WState) -> UnitVector:
    res = nearest_product(w)
    if not res.cls.is_highly:
        raise NotHighlyEntangled(f"state is {res.cls.value}; duality holds for highly entangled states only")
    if not in_region(res.dual.x):
        # happens for zero coefficients: the dual vector sits on the region boundary
        raise RegionViolation("dual vector lies on the boundary of the open region")
    return res.dual


def unit_vector_to_product(x: UnitVector) -> ProductState:
    v = np.asarray(x.x, dtype=float)
    _check_unit(v)
    if np.any(v < 0) or np.any(v > 1):
        raise RegionViolation("components must lie in [0, 1]")
    return ProductState(np.arccos(v))


def unit_vector_to_w(x: UnitVector) -> WState:
    v = np.asarray(x.x, dtype=float)
    _check_unit(v)
    if not in_region(v):
        raise RegionViolation("x is outside the open region of highly entangled duals")
    # sin(2 theta) = 2 x sqrt(1 - x^2)
    s2 = 2.0 * v * np.sqrt((1.0 - v) * (1.0 + v))
    r = 1.0 / math.sqrt(float(np.sum(s2**2)))
    c = r * s2
    norm_err = abs(float(np.sum(c**2)) - 1.0)
    assert norm_err <= 1e-10, norm_err
    return make_wstate(c)
