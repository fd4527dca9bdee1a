"""Geometric measure of entanglement for generalized multiqubit W states."""
from .branch import Branch, BranchSolution, classify, f_eval, r_crit, solve_branch, solve_r
from .core import EntanglementClass, ProductState, UnitVector, WState, make_wstate, overlap_product_w
from .duality import unit_vector_to_product, unit_vector_to_w, w_to_unit_vector
from .measure import MeasureResult, g_from_thetas, nearest_product, stationarity_residual, thetas_from_r
from .oracle import OracleResult, grid_search, hopm_maximize, statevector_overlap

__all__ = [
    "Branch",
    "BranchSolution",
    "EntanglementClass",
    "MeasureResult",
    "OracleResult",
    "ProductState",
    "UnitVector",
    "WState",
    "classify",
    "f_eval",
    "g_from_thetas",
    "grid_search",
    "hopm_maximize",
    "make_wstate",
    "nearest_product",
    "overlap_product_w",
    "r_crit",
    "solve_branch",
    "solve_r",
    "stationarity_residual",
    "statevector_overlap",
    "thetas_from_r",
    "unit_vector_to_product",
    "unit_vector_to_w",
    "w_to_unit_vector",
]
