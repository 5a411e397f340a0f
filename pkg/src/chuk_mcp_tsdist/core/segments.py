"""
Segmentation primitives - SegmentationResult and SegmentDistanceMatrix.

A cut point k (1-based) means "cut between element k and k+1". A series of
length n with cut points k_1 < ... < k_m yields m + 1 contiguous segments
that partition [1, n] in order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import NDArray

from chuk_mcp_tsdist.core.errors import InvalidMatrixError, TsDistError
from chuk_mcp_tsdist.core.series import TimeSeries


@dataclass(frozen=True)
class SegmentationResult:
    """
    Cut points and derived segment ranges for one series under one threshold.

    threshold is None only for single-point series, which are never cut
    and need no threshold.
    """

    series_id: str
    length: int
    threshold: float | None
    cut_points: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.length < 1:
            raise TsDistError(f"Segmented series must have length >= 1, got {self.length}")
        if self.threshold is not None and self.threshold < 0:
            raise TsDistError(f"Threshold must be >= 0, got {self.threshold}")
        object.__setattr__(self, "cut_points", tuple(int(k) for k in self.cut_points))
        previous = 0
        for k in self.cut_points:
            if not previous < k < self.length:
                raise TsDistError(
                    f"Cut points must be strictly increasing within [1, {self.length - 1}], "
                    f"got {list(self.cut_points)}"
                )
            previous = k

    @property
    def segments(self) -> list[tuple[int, int]]:
        """Inclusive 1-based (start, end) ranges, in order."""
        starts = [1, *(k + 1 for k in self.cut_points)]
        ends = [*self.cut_points, self.length]
        return list(zip(starts, ends, strict=True))

    @property
    def segment_count(self) -> int:
        """Number of segments (cut points + 1)."""
        return len(self.cut_points) + 1

    def slice(self, series: TimeSeries) -> list[TimeSeries]:
        """
        Materialize the segments of a series.

        Args:
            series: The series this result was computed for

        Returns:
            One TimeSeries per segment, in order
        """
        if len(series) != self.length:
            raise TsDistError(
                f"Segmentation of length {self.length} applied to series of length {len(series)}"
            )
        return [series.slice(start, end) for start, end in self.segments]

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        d: dict[str, Any] = {"series": self.series_id, "length": self.length}
        if self.threshold is not None:
            # JSON has no infinity; an infinite override is written as "inf"
            d["threshold"] = self.threshold if math.isfinite(self.threshold) else "inf"
        d["cut_points"] = list(self.cut_points)
        d["segments"] = [list(r) for r in self.segments]
        return d


@dataclass(frozen=True, eq=False)
class SegmentDistanceMatrix:
    """
    Base distances between every segment of A (rows) and of B (columns).
    """

    values: NDArray[np.float64]

    def __post_init__(self) -> None:
        arr = np.array(self.values, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
            raise InvalidMatrixError(
                f"Segment distance matrix must be 2-D non-empty, got {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise InvalidMatrixError("Segment distance matrix contains non-finite values")
        if (arr < 0).any():
            raise InvalidMatrixError("Segment distance matrix contains negative values")
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def rows(self) -> int:
        """Segment count of A."""
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        """Segment count of B."""
        return int(self.values.shape[1])

    def transpose(self) -> SegmentDistanceMatrix:
        """Matrix with the roles of A and B swapped."""
        return SegmentDistanceMatrix(self.values.T)
