"""
Dataset construction recipes.

All recipes operate on already-loaded TimeSeries and are deterministic
functions of their inputs (and seed, where one is taken).
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from chuk_mcp_tsdist.constants import ErrorMessages
from chuk_mcp_tsdist.core.errors import DimensionMismatchError, InvalidSeriesError, TsDistError
from chuk_mcp_tsdist.core.series import TimeSeries, z_normalize


def preprocess(
    t: TimeSeries,
    truncate_fraction: float = 1.0,
    dedup: bool = False,
    znormalize: bool = False,
) -> TimeSeries:
    """
    Clean a raw series.

    Steps, in order:
    1. dedup: collapse runs of identical consecutive points to one
    2. keep the first ceil(truncate_fraction * n) points
    3. znormalize: per-dimension z-normalization

    Args:
        t: Input series
        truncate_fraction: Fraction of the series to keep, in (0, 1]
        dedup: Collapse repeated consecutive points
        znormalize: Z-normalize the result

    Returns:
        New series with the same id
    """
    if not 0.0 < truncate_fraction <= 1.0:
        raise TsDistError(f"truncate_fraction must be in (0, 1], got {truncate_fraction}")

    points = t.points
    if dedup and len(t) > 1:
        changed = np.any(points[1:] != points[:-1], axis=1)
        points = points[np.concatenate(([True], changed))]

    keep = math.ceil(round(truncate_fraction * points.shape[0], 9))
    points = points[:keep]
    if points.shape[0] == 0:
        raise InvalidSeriesError(ErrorMessages.EMPTY_SERIES.format(series_id=t.id))

    result = t.with_points(points)
    return z_normalize(result) if znormalize else result


def concat_recipe(
    parts: Sequence[TimeSeries],
    offsets: Sequence[float] | None = None,
    series_id: str = "concat",
) -> TimeSeries:
    """
    Concatenate parts, shifting part k by offsets[k] in every component.

    Example:
        parts (1, 2), (1, 2) with offsets (0, 100) -> (1, 2, 101, 102)

    Raises:
        DimensionMismatchError: parts differ in dimension
        TsDistError: no parts, or offsets of the wrong length
    """
    if not parts:
        raise TsDistError("concat_recipe needs at least one part")
    shifts = [0.0] * len(parts) if offsets is None else [float(o) for o in offsets]
    if len(shifts) != len(parts):
        raise TsDistError(f"{len(parts)} parts but {len(shifts)} offsets")

    dims = {p.dim for p in parts}
    if len(dims) > 1:
        raise DimensionMismatchError(f"Parts have different dimensions: {sorted(dims)}")

    points = np.concatenate([p.points + shift for p, shift in zip(parts, shifts, strict=True)])
    return TimeSeries(points=points, id=series_id)


def subsample_windows(
    t: TimeSeries, window: int, count: int, seed: int = 0
) -> list[TimeSeries]:
    """
    Random contiguous windows of a series.

    Start indices are drawn uniformly from every valid position; output
    ids are '<id>_w<k>'.

    Raises:
        TsDistError: window or count not positive, or window > len(t)
    """
    if window < 1 or count < 1:
        raise TsDistError(f"window and count must be positive, got {window} and {count}")
    if window > len(t):
        raise TsDistError(f"Window {window} longer than series '{t.id}' ({len(t)} points)")

    rng = np.random.default_rng(seed)
    starts = rng.integers(0, len(t) - window + 1, size=count)
    return [
        TimeSeries(points=t.points[s : s + window], id=f"{t.id}_w{k}")
        for k, s in enumerate(starts.tolist())
    ]
