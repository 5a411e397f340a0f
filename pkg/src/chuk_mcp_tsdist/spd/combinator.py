"""
The segmented pairwise distance (SPD) combinator.

Given any base distance, SPD:
1. picks a threshold per series and cuts both series at their large gaps,
2. fills the segment-pair matrix D[i][j] = base(a_i, b_j),
3. sums every row minimum, then adds the column minimum of every column no
   row picked (Dis1),
4. repeats on the transpose (Dis2),
5. reports min(Dis1, Dis2) / (n1 + n2).

Taking the minimum over both directions makes the result symmetric.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from chuk_mcp_tsdist.constants import DEFAULT_QUANTILE
from chuk_mcp_tsdist.core.segments import SegmentationResult, SegmentDistanceMatrix
from chuk_mcp_tsdist.core.series import TimeSeries, ensure_same_dim
from chuk_mcp_tsdist.elastic.measures import dtw
from chuk_mcp_tsdist.spd.segmentation import segment_series

logger = logging.getLogger(__name__)

BaseDistance = Callable[[TimeSeries, TimeSeries], float]


@dataclass(frozen=True)
class DirectionalPass:
    """
    One greedy pass over the segment-pair matrix (rows pick first).

    assignments[i] is the 1-based column picked by row i + 1 (lowest index
    on ties); leftovers are the 1-based columns no row picked, each of which
    contributed its own column minimum.
    """

    total: float
    assignments: tuple[int, ...]
    leftovers: tuple[int, ...]


def greedy_pass(values: NDArray[np.float64]) -> DirectionalPass:
    """
    Sum of row minima plus minima of the columns never picked.

    Args:
        values: (rows, cols) matrix of non-negative distances

    Returns:
        DirectionalPass with the total and the bookkeeping
    """
    rows, cols = values.shape
    picked = np.argmin(values, axis=1)
    total = float(np.sum(values[np.arange(rows), picked]))

    chosen = set(picked.tolist())
    leftovers = [j for j in range(cols) if j not in chosen]
    if leftovers:
        total += float(np.sum(np.min(values[:, leftovers], axis=0)))

    return DirectionalPass(
        total=total,
        assignments=tuple(int(j) + 1 for j in picked),
        leftovers=tuple(j + 1 for j in leftovers),
    )


@dataclass(frozen=True)
class SpdBreakdown:
    """
    Everything SPD computed for one pair.

    dis1 is the row-first pass over D (rows = segments of A), dis2 the
    row-first pass over the transpose. raw = min(dis1, dis2) is the
    unnormalized distance; normalized divides it by n1 + n2.
    """

    dis1: float
    dis2: float
    row_assignments: tuple[int, ...]
    leftover_columns: tuple[int, ...]
    column_assignments: tuple[int, ...]
    leftover_rows: tuple[int, ...]
    n1: int
    n2: int
    segmentation_a: SegmentationResult
    segmentation_b: SegmentationResult
    matrix: SegmentDistanceMatrix

    @property
    def raw(self) -> float:
        """min(Dis1, Dis2)."""
        return min(self.dis1, self.dis2)

    @property
    def normalized(self) -> float:
        """min(Dis1, Dis2) / (n1 + n2)."""
        return self.raw / (self.n1 + self.n2)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "dis1": self.dis1,
            "dis2": self.dis2,
            "raw": self.raw,
            "normalized": self.normalized,
            "row_assignments": list(self.row_assignments),
            "leftover_columns": list(self.leftover_columns),
            "column_assignments": list(self.column_assignments),
            "leftover_rows": list(self.leftover_rows),
            "segment_matrix": self.matrix.values.tolist(),
        }


def segment_pair_matrix(
    segments_a: list[TimeSeries], segments_b: list[TimeSeries], base: BaseDistance
) -> SegmentDistanceMatrix:
    """D[i][j] = base(a_i, b_j) for every segment pair."""
    values = np.empty((len(segments_a), len(segments_b)), dtype=np.float64)
    for i, seg_a in enumerate(segments_a):
        for j, seg_b in enumerate(segments_b):
            values[i, j] = base(seg_a, seg_b)
    return SegmentDistanceMatrix(values)


def spd_distance(
    a: TimeSeries,
    b: TimeSeries,
    base: BaseDistance = dtw,
    q: float = DEFAULT_QUANTILE,
    *,
    threshold: float | None = None,
) -> SpdBreakdown:
    """
    Segmented pairwise distance between two series.

    Args:
        a: First series
        b: Second series (same dimension)
        base: Distance applied to every segment pair
        q: Segmentation quantile, applied to each series separately
        threshold: Absolute threshold for both series, overriding q
            (float('inf') disables cutting)

    Returns:
        SpdBreakdown; .normalized is the SPD distance

    Example:
        spd_distance(A, B, threshold=2).raw == 2.0 for the
        (4,5,6,1,2,3,7,8,9) / (1,2,3,7,8,9,4,6,5) pair
    """
    ensure_same_dim(a, b)
    seg_a = segment_series(a, q, threshold)
    seg_b = segment_series(b, q, threshold)

    matrix = segment_pair_matrix(seg_a.slice(a), seg_b.slice(b), base)
    forward = greedy_pass(matrix.values)
    backward = greedy_pass(matrix.values.T)

    logger.debug(
        f"SPD '{a.id}' x '{b.id}': {matrix.rows}x{matrix.cols} segment pairs, "
        f"Dis1={forward.total:g}, Dis2={backward.total:g}"
    )

    return SpdBreakdown(
        dis1=forward.total,
        dis2=backward.total,
        row_assignments=forward.assignments,
        leftover_columns=forward.leftovers,
        column_assignments=backward.assignments,
        leftover_rows=backward.leftovers,
        n1=len(a),
        n2=len(b),
        segmentation_a=seg_a,
        segmentation_b=seg_b,
        matrix=matrix,
    )
