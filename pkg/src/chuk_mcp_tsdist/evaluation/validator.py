"""
Dataset Validator - checks that series, labels and matrices fit together.

Validates:
- Every series has a label and every label names a series (orphans)
- At least two series and at least two clusters
- Singleton clusters (their members score SI = 0)
- Uniform dimension across series
- Uniform length (required by the lock-step baseline only)
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from enum import Enum

from chuk_mcp_tsdist.core.matrix import DistanceMatrix
from chuk_mcp_tsdist.core.series import TimeSeries


class ValidationSeverity(str, Enum):
    """Severity level for validation issues."""

    ERROR = "error"  # Evaluation impossible
    WARNING = "warning"  # Evaluation possible but scores may mislead
    INFO = "info"


@dataclass
class ValidationIssue:
    """A single validation issue."""

    severity: ValidationSeverity
    code: str
    message: str
    location: str | None = None

    def __str__(self) -> str:
        prefix = f"[{self.severity.value.upper()}]"
        location = f" at {self.location}" if self.location else ""
        return f"{prefix} {self.code}: {self.message}{location}"


class ValidationResult:
    """Result of validating a dataset."""

    def __init__(self) -> None:
        self.issues: list[ValidationIssue] = []

    def add(
        self,
        severity: ValidationSeverity,
        code: str,
        message: str,
        location: str | None = None,
    ) -> None:
        """Add an issue."""
        self.issues.append(ValidationIssue(severity, code, message, location))

    @property
    def is_valid(self) -> bool:
        """True if no errors (warnings/info are OK)."""
        return not self.errors

    @property
    def errors(self) -> list[ValidationIssue]:
        """All error issues."""
        return [i for i in self.issues if i.severity == ValidationSeverity.ERROR]

    @property
    def warnings(self) -> list[ValidationIssue]:
        """All warning issues."""
        return [i for i in self.issues if i.severity == ValidationSeverity.WARNING]

    def codes(self) -> set[str]:
        """Codes of every issue."""
        return {i.code for i in self.issues}

    def __bool__(self) -> bool:
        return self.is_valid

    def __str__(self) -> str:
        if not self.issues:
            return "Validation passed: no issues found"
        return "\n".join(str(issue) for issue in self.issues)


class DatasetValidator:
    """Validates series/labels/matrix consistency before evaluation."""

    def validate(
        self, series: Sequence[TimeSeries], labels: Mapping[str, str]
    ) -> ValidationResult:
        """
        Validate loaded series against a label map.

        Args:
            series: Series to be evaluated
            labels: Series id -> label

        Returns:
            ValidationResult with any issues found
        """
        result = ValidationResult()
        self._validate_orphans([s.id for s in series], labels, result)
        self._validate_clusters([s.id for s in series], labels, result)
        self._validate_shapes(series, result)
        return result

    def validate_matrix(
        self, matrix: DistanceMatrix, labels: Mapping[str, str]
    ) -> ValidationResult:
        """Validate a stored distance matrix against a label map."""
        result = ValidationResult()
        self._validate_orphans(list(matrix.ids), labels, result)
        self._validate_clusters(list(matrix.ids), labels, result)
        return result

    def _validate_orphans(
        self, ids: list[str], labels: Mapping[str, str], result: ValidationResult
    ) -> None:
        known = set(ids)
        for sid in ids:
            if sid not in labels:
                result.add(
                    ValidationSeverity.ERROR,
                    "UNLABELED_SERIES",
                    f"Series '{sid}' has no label",
                    f"series/{sid}",
                )
        for sid in labels:
            if sid not in known:
                result.add(
                    ValidationSeverity.ERROR,
                    "ORPHAN_LABEL",
                    f"Label for unknown series '{sid}'",
                    f"labels/{sid}",
                )

    def _validate_clusters(
        self, ids: list[str], labels: Mapping[str, str], result: ValidationResult
    ) -> None:
        if len(ids) < 2:
            result.add(
                ValidationSeverity.ERROR,
                "TOO_FEW_SERIES",
                f"Need at least 2 series, got {len(ids)}",
            )

        sizes = Counter(labels[sid] for sid in ids if sid in labels)
        if len(sizes) < 2:
            result.add(
                ValidationSeverity.ERROR,
                "SINGLE_CLUSTER",
                f"Silhouette needs at least 2 clusters, got {len(sizes)}",
            )
        for label, count in sorted(sizes.items()):
            if count == 1:
                result.add(
                    ValidationSeverity.WARNING,
                    "SINGLETON_CLUSTER",
                    f"Cluster '{label}' has one member; its SI is fixed at 0",
                    f"clusters/{label}",
                )

    def _validate_shapes(self, series: Sequence[TimeSeries], result: ValidationResult) -> None:
        dims = sorted({s.dim for s in series})
        if len(dims) > 1:
            result.add(
                ValidationSeverity.ERROR,
                "MIXED_DIMENSIONS",
                f"Series have different dimensions: {dims}",
            )
        lengths = {len(s) for s in series}
        if len(lengths) > 1:
            result.add(
                ValidationSeverity.INFO,
                "MIXED_LENGTHS",
                f"Series lengths range {min(lengths)}-{max(lengths)}; "
                "the lock-step baseline is unavailable",
            )
