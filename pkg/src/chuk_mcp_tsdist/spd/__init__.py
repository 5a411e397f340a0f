"""
Segmented pairwise distance.

This module provides:
- segmentation_threshold / segment / segment_series: quantile-threshold cutting
- spd_distance: the combinator over any base distance
- make_spd_variant: SDTW, SCIDTW, SDDTW, SWDTW, SWDDTW (and the plain bases)
"""

from chuk_mcp_tsdist.spd.combinator import (
    BaseDistance,
    DirectionalPass,
    SpdBreakdown,
    greedy_pass,
    segment_pair_matrix,
    spd_distance,
)
from chuk_mcp_tsdist.spd.segmentation import (
    nearest_rank,
    segment,
    segment_series,
    segmentation_threshold,
)
from chuk_mcp_tsdist.spd.variants import DistanceMeasure, base_distance, make_spd_variant

__all__ = [
    "BaseDistance",
    "DirectionalPass",
    "DistanceMeasure",
    "SpdBreakdown",
    "base_distance",
    "greedy_pass",
    "make_spd_variant",
    "nearest_rank",
    "segment",
    "segment_pair_matrix",
    "segment_series",
    "segmentation_threshold",
    "spd_distance",
]
