"""
Core domain types - the layer everything else composes on.

- TimeSeries: immutable d-dimensional series, validated at construction
- SegmentationResult: cut points and segment ranges of one series
- SegmentDistanceMatrix: base distances between segment pairs
- DistanceMatrix: symmetric pairwise distances over a dataset
- LabeledDataset: series with cluster labels
"""

from chuk_mcp_tsdist.core.dataset import LabeledDataset
from chuk_mcp_tsdist.core.errors import (
    AsymmetricDistanceError,
    ConfigurationError,
    DegenerateComplexityError,
    DimensionMismatchError,
    InvalidMatrixError,
    InvalidSeriesError,
    LengthMismatchError,
    PairwiseComputationError,
    ParseError,
    SeriesTooShortError,
    SilhouetteError,
    TsDistError,
)
from chuk_mcp_tsdist.core.matrix import DistanceMatrix
from chuk_mcp_tsdist.core.segments import SegmentationResult, SegmentDistanceMatrix
from chuk_mcp_tsdist.core.series import (
    TimeSeries,
    as_series,
    consecutive_distances,
    point_distance,
    z_normalize,
)

__all__ = [
    # Types
    "TimeSeries",
    "SegmentationResult",
    "SegmentDistanceMatrix",
    "DistanceMatrix",
    "LabeledDataset",
    # Operations
    "as_series",
    "point_distance",
    "consecutive_distances",
    "z_normalize",
    # Errors
    "TsDistError",
    "InvalidSeriesError",
    "DimensionMismatchError",
    "LengthMismatchError",
    "SeriesTooShortError",
    "DegenerateComplexityError",
    "ConfigurationError",
    "InvalidMatrixError",
    "AsymmetricDistanceError",
    "SilhouetteError",
    "PairwiseComputationError",
    "ParseError",
]
