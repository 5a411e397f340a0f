"""
Elastic distances - DTW and its derivatives, plus a lock-step baseline.

Every measure accepts TimeSeries (or anything array-like, which is wrapped
as a univariate/multivariate series) and returns an unnormalized float.
No warping window is applied: alignments are unconstrained.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from chuk_mcp_tsdist.constants import (
    DEFAULT_PENALTY,
    DEFAULT_WEIGHT_MAX,
    ErrorMessages,
    MidpointRule,
)
from chuk_mcp_tsdist.core.errors import (
    DegenerateComplexityError,
    LengthMismatchError,
    SeriesTooShortError,
)
from chuk_mcp_tsdist.core.series import TimeSeries, as_series, ensure_same_dim
from chuk_mcp_tsdist.elastic.kernels import accumulated_cost, accumulated_cost_matrix

SeriesLike = TimeSeries | ArrayLike


def _prepare(a: SeriesLike, b: SeriesLike) -> tuple[TimeSeries, TimeSeries]:
    sa = as_series(a, "a")
    sb = as_series(b, "b")
    ensure_same_dim(sa, sb)
    return sa, sb


def _weighted_cost(a: TimeSeries, b: TimeSeries, weights: NDArray[np.float64]) -> float:
    # Shorter series on the inner loop; the recursion is symmetric under transposition
    x, y = (a.points, b.points) if len(a) >= len(b) else (b.points, a.points)
    return float(accumulated_cost(x, y, weights))


def _unit_weights(a: TimeSeries, b: TimeSeries) -> NDArray[np.float64]:
    return np.ones(max(len(a), len(b)), dtype=np.float64)


# ---------------------------------------------------------------------------
# DTW
# ---------------------------------------------------------------------------


def dtw(a: SeriesLike, b: SeriesLike) -> float:
    """
    Unconstrained dynamic time warping distance.

    Args:
        a: First series
        b: Second series (same dimension)

    Returns:
        D(n1, n2) of the standard recursion with Euclidean local cost

    Example:
        dtw([4, 5, 6], [4, 6, 5]) == 2.0
    """
    sa, sb = _prepare(a, b)
    return _weighted_cost(sa, sb, _unit_weights(sa, sb))


@dataclass(frozen=True, eq=False)
class CostMatrix:
    """
    Full cumulative cost matrix with its optimal warping path.

    values[i - 1, j - 1] holds D(i, j); path is a list of 1-based (i, j)
    pairs from (1, 1) to (n1, n2).
    """

    values: NDArray[np.float64]
    path: list[tuple[int, int]] = field(default_factory=list)

    @property
    def distance(self) -> float:
        """D(n1, n2)."""
        return float(self.values[-1, -1])

    @property
    def dims(self) -> tuple[int, int]:
        """(n1, n2)."""
        return int(self.values.shape[0]), int(self.values.shape[1])

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "distance": self.distance,
            "dims": list(self.dims),
            "path": [list(p) for p in self.path],
        }


def warping_path(values: NDArray[np.float64]) -> list[tuple[int, int]]:
    """
    Trace the optimal monotone path back through a cumulative cost matrix.

    Ties prefer the diagonal step, then the step that shortens A, then B.
    """
    i, j = values.shape[0] - 1, values.shape[1] - 1
    path = [(i + 1, j + 1)]
    while i > 0 or j > 0:
        if i == 0:
            j -= 1
        elif j == 0:
            i -= 1
        else:
            candidates = (values[i - 1, j - 1], values[i - 1, j], values[i, j - 1])
            step = int(np.argmin(candidates))
            if step == 0:
                i, j = i - 1, j - 1
            elif step == 1:
                i -= 1
            else:
                j -= 1
        path.append((i + 1, j + 1))
    path.reverse()
    return path


def cost_matrix(
    a: SeriesLike, b: SeriesLike, weights: NDArray[np.float64] | None = None
) -> CostMatrix:
    """
    Retain the whole cumulative cost matrix and extract the warping path.

    Quadratic memory; use dtw() when only the distance is needed.

    Args:
        a: First series
        b: Second series
        weights: Optional phase weights (length >= max(n1, n2)); all ones if None
    """
    sa, sb = _prepare(a, b)
    w = _unit_weights(sa, sb) if weights is None else np.asarray(weights, dtype=np.float64)
    if w.shape[0] < max(len(sa), len(sb)):
        raise ValueError(f"Need {max(len(sa), len(sb))} phase weights, got {w.shape[0]}")
    values = np.array(accumulated_cost_matrix(sa.points, sb.points, w))
    return CostMatrix(values=values, path=warping_path(values))


def dtw_path(a: SeriesLike, b: SeriesLike) -> tuple[float, list[tuple[int, int]]]:
    """DTW distance together with its optimal warping path."""
    cm = cost_matrix(a, b)
    return cm.distance, cm.path


# ---------------------------------------------------------------------------
# CIDTW
# ---------------------------------------------------------------------------


def complexity_estimate(series: SeriesLike) -> float:
    """
    Complexity estimate: root of the summed squared consecutive differences.

    Zero for constant and single-point series.
    """
    s = as_series(series)
    return float(np.sqrt(np.sum(np.diff(s.points, axis=0) ** 2)))


def correction_factor(a: SeriesLike, b: SeriesLike, *, lenient: bool = False) -> float:
    """
    max(CE) / min(CE).

    Two zero estimates give 1. One zero estimate raises
    DegenerateComplexityError, or gives 1 when lenient.
    """
    ce_a = complexity_estimate(a)
    ce_b = complexity_estimate(b)
    low, high = min(ce_a, ce_b), max(ce_a, ce_b)
    if low == 0.0:
        if high == 0.0 or lenient:
            return 1.0
        raise DegenerateComplexityError(
            ErrorMessages.DEGENERATE_COMPLEXITY.format(ce_a=ce_a, ce_b=ce_b)
        )
    return high / low


def cidtw(a: SeriesLike, b: SeriesLike, *, lenient: bool = False) -> float:
    """
    Complexity-invariant DTW: DTW(a, b) x CF(a, b).

    Args:
        a: First series
        b: Second series
        lenient: Use CF = 1 instead of raising when exactly one series is flat

    Returns:
        A value >= dtw(a, b)
    """
    sa, sb = _prepare(a, b)
    cf = correction_factor(sa, sb, lenient=lenient)
    return dtw(sa, sb) * cf


# ---------------------------------------------------------------------------
# DDTW
# ---------------------------------------------------------------------------


def derivative_transform(series: SeriesLike, *, pad_single: bool = False) -> TimeSeries:
    """
    First-derivative estimate used by DDTW.

    Interior points use ((a_i - a_{i-1}) + (a_{i+1} - a_{i-1}) / 2) / 2 per
    dimension; the endpoints copy their neighbours. A two-point series maps
    both entries to a_2 - a_1.

    Args:
        series: Input series
        pad_single: Map a single-point series to a zero derivative instead of raising

    Returns:
        Series of the same length, id and dimension
    """
    s = as_series(series)
    p = s.points
    n = len(s)

    if n < 2:
        if pad_single:
            return s.with_points(np.zeros_like(p))
        raise SeriesTooShortError(
            ErrorMessages.TOO_SHORT_FOR_DERIVATIVE.format(series_id=s.id, length=n)
        )
    if n == 2:
        slope = p[1] - p[0]
        return s.with_points(np.vstack([slope, slope]))

    out = np.empty_like(p)
    out[1:-1] = ((p[1:-1] - p[:-2]) + (p[2:] - p[:-2]) / 2.0) / 2.0
    out[0] = out[1]
    out[-1] = out[-2]
    return s.with_points(out)


def ddtw(a: SeriesLike, b: SeriesLike, *, pad_single: bool = False) -> float:
    """DTW between the derivative transforms of both series."""
    sa, sb = _prepare(a, b)
    return dtw(
        derivative_transform(sa, pad_single=pad_single),
        derivative_transform(sb, pad_single=pad_single),
    )


# ---------------------------------------------------------------------------
# WDTW
# ---------------------------------------------------------------------------


def mlwf_weight(phase: float, n_c: float, g: float, w_max: float = DEFAULT_WEIGHT_MAX) -> float:
    """
    Modified logistic weight of a phase difference.

    w = w_max / (1 + exp(-g (phase - n_c)))

    Args:
        phase: Phase difference |i - j|
        n_c: Logistic midpoint
        g: Penalty (steepness), >= 0
        w_max: Weight ceiling, > 0
    """
    if g < 0:
        raise ValueError(f"Penalty g must be >= 0, got {g}")
    if w_max <= 0:
        raise ValueError(f"w_max must be > 0, got {w_max}")
    with np.errstate(over="ignore"):
        return float(w_max / (1.0 + np.exp(-g * (phase - n_c))))


def mlwf_weights(
    length: int, n_c: float, g: float, w_max: float = DEFAULT_WEIGHT_MAX
) -> NDArray[np.float64]:
    """Weights for phases 0 .. length - 1."""
    if g < 0:
        raise ValueError(f"Penalty g must be >= 0, got {g}")
    if w_max <= 0:
        raise ValueError(f"w_max must be > 0, got {w_max}")
    phases = np.arange(length, dtype=np.float64)
    with np.errstate(over="ignore"):
        return w_max / (1.0 + np.exp(-g * (phases - n_c)))


def midpoint(
    n1: int,
    n2: int,
    rule: MidpointRule = MidpointRule.HALF_LONGER,
    n_c: float | None = None,
) -> float:
    """
    Logistic midpoint n_c for a pair of lengths.

    Args:
        n1: Length of A
        n2: Length of B
        rule: Midpoint rule
        n_c: Explicit midpoint, required for MidpointRule.FIXED
    """
    if rule == MidpointRule.FIXED:
        if n_c is None:
            raise ValueError("MidpointRule.FIXED requires n_c")
        return float(n_c)
    if rule == MidpointRule.HALF_SHORTER:
        return float(math.ceil(min(n1, n2) / 2))
    return float(math.ceil(max(n1, n2) / 2))


def wdtw(
    a: SeriesLike,
    b: SeriesLike,
    g: float = DEFAULT_PENALTY,
    w_max: float = DEFAULT_WEIGHT_MAX,
    *,
    n_c: float | None = None,
) -> float:
    """
    Weighted DTW: local costs scaled by the logistic weight of |i - j|.

    Args:
        a: First series
        b: Second series
        g: Phase penalty
        w_max: Weight ceiling
        n_c: Logistic midpoint; defaults to ceil(max(n1, n2) / 2)
    """
    sa, sb = _prepare(a, b)
    centre = midpoint(len(sa), len(sb)) if n_c is None else float(n_c)
    weights = mlwf_weights(max(len(sa), len(sb)), centre, g, w_max)
    return _weighted_cost(sa, sb, weights)


def wddtw(
    a: SeriesLike,
    b: SeriesLike,
    g: float = DEFAULT_PENALTY,
    w_max: float = DEFAULT_WEIGHT_MAX,
    *,
    n_c: float | None = None,
    pad_single: bool = False,
) -> float:
    """Weighted DTW between the derivative transforms of both series."""
    sa, sb = _prepare(a, b)
    return wdtw(
        derivative_transform(sa, pad_single=pad_single),
        derivative_transform(sb, pad_single=pad_single),
        g,
        w_max,
        n_c=n_c,
    )


# ---------------------------------------------------------------------------
# Lock-step baseline
# ---------------------------------------------------------------------------


def euclidean_lockstep(a: SeriesLike, b: SeriesLike) -> float:
    """
    Euclidean distance treating each series as one long vector.

    Raises:
        LengthMismatchError: if the series differ in length
    """
    sa, sb = _prepare(a, b)
    if len(sa) != len(sb):
        raise LengthMismatchError(
            ErrorMessages.LENGTH_MISMATCH.format(len_a=len(sa), len_b=len(sb))
        )
    return float(np.sqrt(np.sum((sa.points - sb.points) ** 2)))
