"""
Quantile-threshold segmentation.

Each series gets its own threshold: the q-quantile (nearest-rank) of its
sorted consecutive distances. The series is cut wherever a consecutive
distance is strictly larger than the threshold, so a series whose gaps are
all equal is never cut and q = 1 never cuts.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from chuk_mcp_tsdist.constants import DEFAULT_QUANTILE
from chuk_mcp_tsdist.core.errors import SeriesTooShortError, TsDistError
from chuk_mcp_tsdist.core.segments import SegmentationResult
from chuk_mcp_tsdist.core.series import TimeSeries, consecutive_distances

logger = logging.getLogger(__name__)


def nearest_rank(m: int, q: float) -> int:
    """
    1-based nearest rank ceil(q * m), clamped to [1, m].

    The product is rounded to 9 decimals first so that e.g. 0.3 * 10 ranks 3.
    """
    return min(max(math.ceil(round(q * m, 9)), 1), m)


def segmentation_threshold(series: TimeSeries, q: float = DEFAULT_QUANTILE) -> float:
    """
    The q-quantile of the series' consecutive distances.

    Args:
        series: Series with at least two points
        q: Quantile in [0, 1]; 1 gives the maximum gap, 0 the minimum

    Returns:
        The element at rank ceil(q * (n - 1)) of the ascending sort

    Raises:
        SeriesTooShortError: for single-point series (no gaps to rank)
    """
    if not 0.0 <= q <= 1.0:
        raise TsDistError(f"Quantile q must be in [0, 1], got {q}")
    diffs = consecutive_distances(series)
    if diffs.size == 0:
        raise SeriesTooShortError(f"Series '{series.id}' has a single point; no threshold")
    ordered = np.sort(diffs)
    return float(ordered[nearest_rank(diffs.size, q) - 1])


def segment(series: TimeSeries, threshold: float) -> SegmentationResult:
    """
    Cut a series wherever a consecutive distance exceeds the threshold.

    Args:
        series: Series to cut
        threshold: Non-negative threshold (inf never cuts)

    Returns:
        SegmentationResult with cut k meaning "between element k and k+1"
    """
    if threshold < 0 or math.isnan(threshold):
        raise TsDistError(f"Threshold must be >= 0, got {threshold}")
    diffs = consecutive_distances(series)
    cuts = tuple(int(k) + 1 for k in np.flatnonzero(diffs > threshold))
    return SegmentationResult(
        series_id=series.id, length=len(series), threshold=float(threshold), cut_points=cuts
    )


def segment_series(
    series: TimeSeries,
    q: float = DEFAULT_QUANTILE,
    threshold: float | None = None,
) -> SegmentationResult:
    """
    Threshold selection plus cutting in one step.

    An explicit threshold overrides q. Single-point series yield one
    segment and no threshold.
    """
    if len(series) == 1:
        return SegmentationResult(series_id=series.id, length=1, threshold=None)
    value = segmentation_threshold(series, q) if threshold is None else threshold
    result = segment(series, value)
    logger.debug(
        f"Segmented '{series.id}' (n={len(series)}) at threshold {value:g}: "
        f"{result.segment_count} segments"
    )
    return result
