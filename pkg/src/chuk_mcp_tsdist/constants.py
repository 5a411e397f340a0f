"""
Constants and enums for the distance system.

No magic strings - use enums and Literal types for constrained values.
"""

from enum import Enum, IntEnum
from typing import Literal


class BaseAlgorithm(str, Enum):
    """
    Base (non-segmented) distance algorithms.

    Every one of them except the lock-step baseline can be wrapped by SPD.
    """

    DTW = "dtw"
    CIDTW = "cidtw"  # Complexity-invariant DTW
    DDTW = "ddtw"  # Derivative DTW
    WDTW = "wdtw"  # Weighted DTW (logistic phase penalty)
    WDDTW = "wddtw"  # Weighted derivative DTW
    EUCLIDEAN_LOCKSTEP = "euclidean_lockstep"


class MidpointRule(str, Enum):
    """How the logistic midpoint n_c of the WDTW weight is chosen."""

    HALF_LONGER = "half_longer"  # ceil(max(n1, n2) / 2)
    HALF_SHORTER = "half_shorter"  # ceil(min(n1, n2) / 2)
    FIXED = "fixed"  # AlgoConfig.n_c


class OutputFormat(str, Enum):
    """Report formats for evaluation output."""

    TEXT = "text"
    CSV = "csv"


class BenchmarkReport(str, Enum):
    """What tsdist benchmark prints."""

    TABLE = "table"
    IMPROVEMENT = "improvement"
    Q_SENSITIVITY = "q-sensitivity"


class Recipe(str, Enum):
    """Dataset construction recipes."""

    CONCAT = "concat"
    SYNTHETIC = "synthetic"


class ExitCode(IntEnum):
    """CLI exit codes."""

    OK = 0
    RUNTIME_ERROR = 1
    USAGE_ERROR = 2


# Algorithm names accepted by the CLI and AlgoConfig.from_name
# (SPD variants carry an "s" prefix, as in the benchmark tables)
ALGORITHM_NAMES: dict[str, tuple[BaseAlgorithm, bool]] = {
    "dtw": (BaseAlgorithm.DTW, False),
    "cidtw": (BaseAlgorithm.CIDTW, False),
    "ddtw": (BaseAlgorithm.DDTW, False),
    "wdtw": (BaseAlgorithm.WDTW, False),
    "wddtw": (BaseAlgorithm.WDDTW, False),
    "euclidean": (BaseAlgorithm.EUCLIDEAN_LOCKSTEP, False),
    "sdtw": (BaseAlgorithm.DTW, True),
    "scidtw": (BaseAlgorithm.CIDTW, True),
    "sddtw": (BaseAlgorithm.DDTW, True),
    "swdtw": (BaseAlgorithm.WDTW, True),
    "swddtw": (BaseAlgorithm.WDDTW, True),
}

# Experimental defaults
DEFAULT_QUANTILE = 0.99
DEFAULT_PENALTY = 0.01
DEFAULT_WEIGHT_MAX = 1.0

# Numeric formatting and tolerances
SIGNIFICANT_DIGITS = 12
SI_DECIMALS = 3
SYMMETRY_TOLERANCE = 1e-9

# Files
LABELS_FILENAME = "labels.csv"
SERIES_SUFFIX = ".csv"
THREADS_ENV_VAR = "TSDIST_THREADS"
PRESETS_ENV_VAR = "TSDIST_PRESETS_DIR"

# Series ids travel through CSV headers and file names unquoted
ID_PATTERN = r"^[A-Za-z0-9_-]+$"

# Schema versions
SchemaVersion = Literal["preset/v1"]


class ErrorMessages:
    """Standardized error messages."""

    DIMENSION_MISMATCH = "Dimension mismatch: {dim_a} vs {dim_b}."
    LENGTH_MISMATCH = "Length mismatch: {len_a} vs {len_b}; lock-step distance needs equal lengths."
    EMPTY_SERIES = "Series '{series_id}' is empty."
    NON_FINITE = "Series '{series_id}' contains NaN or Inf values."
    TOO_SHORT_FOR_DERIVATIVE = "Series '{series_id}' too short for derivative (length {length})."
    DEGENERATE_COMPLEXITY = (
        "Degenerate complexity: CE values {ce_a} and {ce_b}; the correction factor is infinite."
    )
    UNKNOWN_ALGORITHM = "Unknown algorithm: '{name}'. Expected one of {choices}."
    PAIR_FAILED = "Distance between '{id_a}' and '{id_b}' failed: {reason}"
    SINGLE_CLUSTER = "Silhouette needs at least 2 clusters, got {count}."
    PRESET_NOT_FOUND = "Preset '{name}' not found."
    INVALID_ID = "Invalid series id: '{series_id}'. Allowed characters: A-Z a-z 0-9 _ -."


class SuccessMessages:
    """Standardized success messages."""

    MATRIX_WRITTEN = "Wrote {n}x{n} matrix ({pairs} pairs) to {path}."
    DATASET_WRITTEN = "Wrote {count} series and labels to {path}."
