"""
Elastic distances - DTW, CIDTW, DDTW, WDTW, WDDTW and a lock-step baseline.
"""

from chuk_mcp_tsdist.elastic.measures import (
    CostMatrix,
    cidtw,
    complexity_estimate,
    correction_factor,
    cost_matrix,
    ddtw,
    derivative_transform,
    dtw,
    dtw_path,
    euclidean_lockstep,
    midpoint,
    mlwf_weight,
    mlwf_weights,
    warping_path,
    wddtw,
    wdtw,
)

__all__ = [
    "CostMatrix",
    "cidtw",
    "complexity_estimate",
    "correction_factor",
    "cost_matrix",
    "ddtw",
    "derivative_transform",
    "dtw",
    "dtw_path",
    "euclidean_lockstep",
    "midpoint",
    "mlwf_weight",
    "mlwf_weights",
    "warping_path",
    "wddtw",
    "wdtw",
]
