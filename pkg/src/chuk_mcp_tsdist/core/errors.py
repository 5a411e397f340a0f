"""
Exception types.

All errors derive from TsDistError, itself a ValueError, so callers that
only care about "bad input" can catch ValueError.
"""

from __future__ import annotations

from pathlib import Path

from chuk_mcp_tsdist.constants import ErrorMessages


class TsDistError(ValueError):
    """Base class for all library errors."""


class InvalidSeriesError(TsDistError):
    """A series violates its construction invariants."""


class DimensionMismatchError(TsDistError):
    """Two points or series have different dimensionality."""


class LengthMismatchError(TsDistError):
    """A lock-step operation received series of different lengths."""


class SeriesTooShortError(TsDistError):
    """A transform needs more points than the series has."""


class DegenerateComplexityError(TsDistError):
    """One complexity estimate is zero while the other is not."""


class ConfigurationError(TsDistError):
    """Invalid algorithm configuration or runtime settings."""


class InvalidMatrixError(TsDistError):
    """A distance matrix violates squareness, zero diagonal, or non-negativity."""


class AsymmetricDistanceError(InvalidMatrixError):
    """A distance matrix (or distance operation) is not symmetric."""


class SilhouetteError(TsDistError):
    """Silhouette evaluation is undefined for the given labels."""


class PairwiseComputationError(TsDistError):
    """A single pair failed while filling a distance matrix."""

    def __init__(self, id_a: str, id_b: str, cause: BaseException):
        self.id_a = id_a
        self.id_b = id_b
        self.cause = cause
        super().__init__(ErrorMessages.PAIR_FAILED.format(id_a=id_a, id_b=id_b, reason=cause))


class ParseError(TsDistError):
    """A file could not be parsed."""

    def __init__(self, path: Path | str, line: int | None, message: str):
        self.path = Path(path)
        self.line = line
        location = f"{self.path}:{line}" if line is not None else str(self.path)
        super().__init__(f"{location}: {message}")
