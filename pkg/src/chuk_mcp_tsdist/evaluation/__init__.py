"""
Evaluation - distance matrices, silhouette index, benchmark tables.

This module provides:
- pairwise_matrix: parallel n(n-1)/2 pair computation
- silhouette / SilhouetteReport: per-series and overall SI
- run_benchmark / BenchmarkTable: SI per (sub-dataset, algorithm), q sweeps,
  family averages and segmented-vs-plain improvements
- DatasetValidator: series/labels/matrix consistency checks
"""

from chuk_mcp_tsdist.evaluation.benchmark import (
    OVERALL,
    BenchmarkRow,
    BenchmarkTable,
    Improvement,
    ImprovementTable,
    QSensitivity,
    run_benchmark,
    sweep_q,
)
from chuk_mcp_tsdist.evaluation.matrix import PairwiseDistance, pairwise_matrix
from chuk_mcp_tsdist.evaluation.silhouette import SilhouetteReport, silhouette
from chuk_mcp_tsdist.evaluation.validator import (
    DatasetValidator,
    ValidationIssue,
    ValidationResult,
    ValidationSeverity,
)

__all__ = [
    "OVERALL",
    "BenchmarkRow",
    "BenchmarkTable",
    "DatasetValidator",
    "Improvement",
    "ImprovementTable",
    "PairwiseDistance",
    "QSensitivity",
    "SilhouetteReport",
    "ValidationIssue",
    "ValidationResult",
    "ValidationSeverity",
    "pairwise_matrix",
    "run_benchmark",
    "silhouette",
    "sweep_q",
]
