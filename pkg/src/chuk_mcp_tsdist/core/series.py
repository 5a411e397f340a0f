"""
Time series primitives - TimeSeries, point distances, consecutive distances.

A TimeSeries is an index-ordered sequence of d-dimensional real points.
Element-level distances are Euclidean norms across dimensions, so the
scalar formulas of DTW and friends lift to multivariate data unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chuk_mcp_tsdist.constants import ErrorMessages
from chuk_mcp_tsdist.core.errors import DimensionMismatchError, InvalidSeriesError


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """
    An immutable d-dimensional time series.

    Points are stored as a read-only C-contiguous float64 array of shape
    (n, dim). One-dimensional input is treated as a univariate series.
    Indices in documentation are 1-based; storage is 0-based.

    Invariants (checked at construction, never at use sites):
    - length >= 1 and dim >= 1
    - all components finite
    """

    points: NDArray[np.float64]
    id: str = "series"

    def __post_init__(self) -> None:
        try:
            arr = np.array(self.points, dtype=np.float64)
        except (TypeError, ValueError) as e:
            raise InvalidSeriesError(f"Series '{self.id}' is not a numeric array: {e}") from e

        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        elif arr.ndim != 2:
            raise InvalidSeriesError(
                f"Series '{self.id}' must be 1-D or 2-D (n, dim), got {arr.ndim}-D"
            )

        if arr.shape[0] == 0:
            raise InvalidSeriesError(ErrorMessages.EMPTY_SERIES.format(series_id=self.id))
        if arr.shape[1] == 0:
            raise InvalidSeriesError(f"Series '{self.id}' has zero dimensions")
        if not np.isfinite(arr).all():
            raise InvalidSeriesError(ErrorMessages.NON_FINITE.format(series_id=self.id))

        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "points", arr)

    @classmethod
    def from_values(cls, values: ArrayLike, series_id: str = "series") -> TimeSeries:
        """Build a series from nested lists, tuples or arrays."""
        return cls(points=np.asarray(values), id=series_id)

    @property
    def dim(self) -> int:
        """Number of components per point."""
        return int(self.points.shape[1])

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeSeries):
            return NotImplemented
        return self.id == other.id and np.array_equal(self.points, other.points)

    def __hash__(self) -> int:
        return hash((self.id, self.points.shape, self.points.tobytes()))

    def __repr__(self) -> str:
        return f"TimeSeries({self.id!r}, n={len(self)}, dim={self.dim})"

    def slice(self, start: int, end: int) -> TimeSeries:
        """
        Sub-series covering 1-based inclusive range [start, end].

        Args:
            start: First index (1-based)
            end: Last index (1-based, inclusive)

        Returns:
            New TimeSeries with id '<id>@<start>-<end>'
        """
        if not 1 <= start <= end <= len(self):
            raise IndexError(f"Range [{start}, {end}] outside series of length {len(self)}")
        return TimeSeries(points=self.points[start - 1 : end], id=f"{self.id}@{start}-{end}")

    def with_id(self, series_id: str) -> TimeSeries:
        """Same points under a different id."""
        return TimeSeries(points=self.points, id=series_id)

    def with_points(self, points: ArrayLike) -> TimeSeries:
        """Different points under the same id."""
        return TimeSeries(points=np.asarray(points), id=self.id)

    def to_list(self) -> list[list[float]]:
        """Points as nested Python lists (JSON-friendly)."""
        return self.points.tolist()  # type: ignore[no-any-return]


def ensure_same_dim(a: TimeSeries, b: TimeSeries) -> None:
    """Raise DimensionMismatchError unless both series share a dimension."""
    if a.dim != b.dim:
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.format(dim_a=a.dim, dim_b=b.dim)
        )


def point_distance(a: ArrayLike, b: ArrayLike) -> float:
    """
    Euclidean distance between two points.

    Args:
        a: Point as scalar or vector
        b: Point as scalar or vector

    Returns:
        ||a - b||, zero iff the points are equal
    """
    va = np.atleast_1d(np.asarray(a, dtype=np.float64))
    vb = np.atleast_1d(np.asarray(b, dtype=np.float64))
    if va.shape != vb.shape:
        raise DimensionMismatchError(
            ErrorMessages.DIMENSION_MISMATCH.format(dim_a=va.size, dim_b=vb.size)
        )
    if not (np.isfinite(va).all() and np.isfinite(vb).all()):
        raise InvalidSeriesError("Point components must be finite")
    return float(np.linalg.norm(va - vb))


def consecutive_distances(series: TimeSeries) -> NDArray[np.float64]:
    """
    Distances between neighbouring points.

    Element k (0-based) is point_distance(t[k], t[k+1]); the result has
    length n - 1 and is empty for a single-point series.
    """
    return np.linalg.norm(np.diff(series.points, axis=0), axis=1)


def z_normalize(series: TimeSeries) -> TimeSeries:
    """
    Per-dimension z-normalization.

    Dimensions with zero variance are centred to 0 rather than divided.
    """
    mean = series.points.mean(axis=0)
    std = series.points.std(axis=0)
    centred = series.points - mean
    scaled = np.divide(centred, std, out=np.zeros_like(centred), where=std > 0)
    return series.with_points(scaled)


def as_series(value: TimeSeries | Any, series_id: str = "series") -> TimeSeries:
    """Coerce array-like input to a TimeSeries, passing TimeSeries through."""
    if isinstance(value, TimeSeries):
        return value
    return TimeSeries.from_values(value, series_id)
