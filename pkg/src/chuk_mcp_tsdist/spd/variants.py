"""
Distance measures built from an AlgoConfig.

make_spd_variant turns a config into a callable pairwise distance. With
spd_enabled the base is applied independently to each segment pair:
CIDTW uses the segments' complexity estimates, WDTW centres its logistic
weight on the segment lengths, DDTW differentiates each segment on its own
so that segment boundaries are not smeared.
"""

from __future__ import annotations

from functools import partial

from chuk_mcp_tsdist.constants import BaseAlgorithm
from chuk_mcp_tsdist.core.errors import ConfigurationError
from chuk_mcp_tsdist.core.series import TimeSeries, ensure_same_dim, z_normalize
from chuk_mcp_tsdist.elastic.measures import (
    cidtw,
    ddtw,
    dtw,
    euclidean_lockstep,
    midpoint,
    wddtw,
    wdtw,
)
from chuk_mcp_tsdist.models.config import AlgoConfig
from chuk_mcp_tsdist.spd.combinator import BaseDistance, SpdBreakdown, spd_distance


def _weighted(config: AlgoConfig, derivative: bool) -> BaseDistance:
    def distance(a: TimeSeries, b: TimeSeries) -> float:
        centre = midpoint(len(a), len(b), config.midpoint_rule, config.n_c)
        if derivative:
            return wddtw(
                a, b, config.g, config.w_max, n_c=centre, pad_single=config.spd_enabled
            )
        return wdtw(a, b, config.g, config.w_max, n_c=centre)

    return distance


def base_distance(config: AlgoConfig) -> BaseDistance:
    """
    The base measure a config selects, specialized with its hyperparameters.

    Under SPD the base tolerates degenerate segments: flat segments get
    CF = 1 and single-point segments get a zero derivative.
    """
    lenient = config.spd_enabled
    match config.base:
        case BaseAlgorithm.DTW:
            return dtw
        case BaseAlgorithm.CIDTW:
            return partial(cidtw, lenient=lenient)
        case BaseAlgorithm.DDTW:
            return partial(ddtw, pad_single=lenient)
        case BaseAlgorithm.WDTW:
            return _weighted(config, derivative=False)
        case BaseAlgorithm.WDDTW:
            return _weighted(config, derivative=True)
        case BaseAlgorithm.EUCLIDEAN_LOCKSTEP:
            return euclidean_lockstep
    raise ConfigurationError(f"Unknown base algorithm: {config.base!r}")


class DistanceMeasure:
    """
    A pairwise distance specialized by an AlgoConfig.

    Calling the measure returns the value used in distance matrices:
    the normalized SPD distance for SPD variants, the plain base distance
    otherwise.
    """

    def __init__(self, config: AlgoConfig):
        """
        Initialize the measure.

        Args:
            config: Algorithm configuration

        Raises:
            ConfigurationError: for combinations that cannot be computed
        """
        if config.spd_enabled and config.base == BaseAlgorithm.EUCLIDEAN_LOCKSTEP:
            raise ConfigurationError(
                "The lock-step Euclidean baseline cannot be SPD-embedded: segment lengths differ"
            )
        self.config = config
        self._base = base_distance(config)

    @property
    def name(self) -> str:
        """Table-style algorithm name."""
        return self.config.name

    def __repr__(self) -> str:
        return f"DistanceMeasure({self.config.fingerprint()!r})"

    def _prepare(self, a: TimeSeries, b: TimeSeries) -> tuple[TimeSeries, TimeSeries]:
        ensure_same_dim(a, b)
        if self.config.znormalize:
            return z_normalize(a), z_normalize(b)
        return a, b

    def breakdown(self, a: TimeSeries, b: TimeSeries) -> SpdBreakdown:
        """
        Full SPD bookkeeping for a pair.

        Raises:
            ConfigurationError: if the config is not an SPD variant
        """
        if not self.config.spd_enabled:
            raise ConfigurationError(f"'{self.name}' is not an SPD variant")
        sa, sb = self._prepare(a, b)
        return spd_distance(sa, sb, self._base, self.config.q, threshold=self.config.threshold)

    def raw(self, a: TimeSeries, b: TimeSeries) -> float:
        """Unnormalized distance: min(Dis1, Dis2) for SPD, the base value otherwise."""
        if self.config.spd_enabled:
            return self.breakdown(a, b).raw
        sa, sb = self._prepare(a, b)
        return self._base(sa, sb)

    def __call__(self, a: TimeSeries, b: TimeSeries) -> float:
        if self.config.spd_enabled:
            return self.breakdown(a, b).normalized
        sa, sb = self._prepare(a, b)
        return self._base(sa, sb)


def make_spd_variant(config: AlgoConfig) -> DistanceMeasure:
    """
    Build the pairwise distance a config describes.

    Args:
        config: e.g. AlgoConfig.from_name('scidtw')

    Returns:
        A callable DistanceMeasure
    """
    return DistanceMeasure(config)
