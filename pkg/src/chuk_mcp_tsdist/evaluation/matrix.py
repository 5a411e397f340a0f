"""
Pairwise distance matrices over labeled datasets.

Each unordered pair is computed once on a joblib thread pool and mirrored.
The compiled kernels release the GIL, so threads scale across cores without
copying series into worker processes.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from itertools import combinations

import numpy as np
from joblib import Parallel, delayed

from chuk_mcp_tsdist.constants import SYMMETRY_TOLERANCE
from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import (
    AsymmetricDistanceError,
    PairwiseComputationError,
    TsDistError,
)
from chuk_mcp_tsdist.core.matrix import DistanceMatrix
from chuk_mcp_tsdist.core.series import TimeSeries
from chuk_mcp_tsdist.models.config import RuntimeSettings

logger = logging.getLogger(__name__)

PairwiseDistance = Callable[[TimeSeries, TimeSeries], float]


def _describe(dist: PairwiseDistance) -> str:
    config = getattr(dist, "config", None)
    if config is not None:
        return str(config.fingerprint())
    return getattr(dist, "__name__", type(dist).__name__)


def _pair(
    dist: PairwiseDistance, a: TimeSeries, b: TimeSeries, check_symmetry: bool
) -> float:
    try:
        value = float(dist(a, b))
        if check_symmetry:
            mirrored = float(dist(b, a))
            if abs(value - mirrored) > SYMMETRY_TOLERANCE * max(1.0, abs(value)):
                raise AsymmetricDistanceError(
                    f"d({a.id}, {b.id}) = {value!r} but d({b.id}, {a.id}) = {mirrored!r}"
                )
    except AsymmetricDistanceError:
        raise
    except Exception as e:
        raise PairwiseComputationError(a.id, b.id, e) from e
    if not np.isfinite(value) or value < 0:
        raise PairwiseComputationError(a.id, b.id, ValueError(f"invalid distance {value!r}"))
    return value


def pairwise_matrix(
    ds: LabeledDataset | Sequence[TimeSeries],
    dist: PairwiseDistance,
    n_jobs: int | None = None,
    *,
    check_symmetry: bool = False,
) -> DistanceMatrix:
    """
    Distance matrix over every pair of series in a dataset.

    Args:
        ds: Dataset (or plain series list) with at least two series
        dist: Pairwise distance, e.g. make_spd_variant(AlgoConfig.from_name('sdtw'))
        n_jobs: joblib worker count; None reads TSDIST_THREADS (0 = every core)
        check_symmetry: Also evaluate d(b, a) and raise on disagreement

    Returns:
        DistanceMatrix in input order, tagged with the distance's fingerprint

    Raises:
        TsDistError: fewer than two series
        PairwiseComputationError: a pair failed; carries both ids
        AsymmetricDistanceError: check_symmetry found d(a, b) != d(b, a)
    """
    series = ds.series if isinstance(ds, LabeledDataset) else tuple(ds)
    n = len(series)
    if n < 2:
        raise TsDistError(f"Need at least 2 series for a distance matrix, got {n}")

    jobs = RuntimeSettings.from_env().n_jobs if n_jobs is None else n_jobs
    pairs = list(combinations(range(n), 2))
    logger.debug(f"Computing {len(pairs)} pairs over {n} series with n_jobs={jobs}")

    results = Parallel(n_jobs=jobs, prefer="threads")(
        delayed(_pair)(dist, series[i], series[j], check_symmetry) for i, j in pairs
    )

    values = np.zeros((n, n), dtype=np.float64)
    for (i, j), value in zip(pairs, results, strict=True):
        values[i, j] = value
        values[j, i] = value

    return DistanceMatrix(ids=tuple(s.id for s in series), values=values, algo=_describe(dist))
