"""
Tests for DatasetValidator.
"""

from chuk_mcp_tsdist.core import DistanceMatrix, TimeSeries
from chuk_mcp_tsdist.evaluation import (
    DatasetValidator,
    ValidationIssue,
    ValidationResult,
    ValidationSeverity,
)


def make_series(*lengths: int, dim: int = 1) -> list[TimeSeries]:
    """Series s0, s1, ... of the given lengths."""
    return [
        TimeSeries.from_values([[float(i)] * dim for i in range(n)], f"s{k}")
        for k, n in enumerate(lengths)
    ]


class TestValidationResult:
    """Tests for ValidationResult."""

    def test_empty_result_is_valid(self) -> None:
        """No issues, valid."""
        result = ValidationResult()
        assert result.is_valid
        assert bool(result)
        assert "no issues" in str(result)

    def test_errors_invalidate(self) -> None:
        """Errors fail validation; warnings do not."""
        result = ValidationResult()
        result.add(ValidationSeverity.WARNING, "W", "careful")
        assert result.is_valid
        result.add(ValidationSeverity.ERROR, "E", "broken", "labels/x")
        assert not result.is_valid
        assert len(result.errors) == 1
        assert len(result.warnings) == 1
        assert result.codes() == {"W", "E"}

    def test_issue_str(self) -> None:
        """Severity, code, message and location."""
        issue = ValidationIssue(ValidationSeverity.ERROR, "CODE", "message", "series/a")
        assert str(issue) == "[ERROR] CODE: message at series/a"


class TestDatasetValidator:
    """Tests for DatasetValidator."""

    def test_clean_dataset(self) -> None:
        """Matching ids, two clusters of two, uniform shape."""
        series = make_series(5, 5, 5, 5)
        labels = {"s0": "a", "s1": "a", "s2": "b", "s3": "b"}
        result = DatasetValidator().validate(series, labels)
        assert result.is_valid
        assert result.issues == []

    def test_unlabeled_and_orphans(self) -> None:
        """Both directions of id mismatch are errors."""
        series = make_series(3, 3, 3)
        labels = {"s0": "a", "s1": "b", "ghost": "b"}
        result = DatasetValidator().validate(series, labels)
        assert not result.is_valid
        assert {"UNLABELED_SERIES", "ORPHAN_LABEL"} <= result.codes()
        locations = {i.location for i in result.errors}
        assert "series/s2" in locations
        assert "labels/ghost" in locations

    def test_single_cluster(self) -> None:
        """One cluster cannot be scored."""
        result = DatasetValidator().validate(make_series(3, 3), {"s0": "a", "s1": "a"})
        assert "SINGLE_CLUSTER" in result.codes()
        assert not result.is_valid

    def test_too_few_series(self) -> None:
        """A single series is rejected."""
        result = DatasetValidator().validate(make_series(3), {"s0": "a"})
        assert "TOO_FEW_SERIES" in result.codes()

    def test_singleton_cluster_warns(self) -> None:
        """Singletons are allowed but flagged."""
        labels = {"s0": "a", "s1": "a", "s2": "b"}
        result = DatasetValidator().validate(make_series(3, 3, 3), labels)
        assert result.is_valid
        assert [w.code for w in result.warnings] == ["SINGLETON_CLUSTER"]
        assert result.warnings[0].location == "clusters/b"

    def test_mixed_dimensions(self) -> None:
        """Series must share a dimension."""
        series = make_series(3, 3) + make_series(3, dim=2)
        series[-1] = series[-1].with_id("s2")
        labels = {"s0": "a", "s1": "a", "s2": "b"}
        assert "MIXED_DIMENSIONS" in DatasetValidator().validate(series, labels).codes()

    def test_mixed_lengths_is_info(self) -> None:
        """Unequal lengths only matter for the lock-step baseline."""
        labels = {"s0": "a", "s1": "a", "s2": "b", "s3": "b"}
        result = DatasetValidator().validate(make_series(3, 4, 5, 6), labels)
        assert result.is_valid
        assert "MIXED_LENGTHS" in result.codes()
        assert result.warnings == []

    def test_validate_matrix(self, two_cluster_matrix: DistanceMatrix) -> None:
        """Matrix ids are checked against labels."""
        validator = DatasetValidator()
        good = {"s1": "a", "s2": "a", "s3": "b", "s4": "b"}
        assert validator.validate_matrix(two_cluster_matrix, good).is_valid
        bad = {"s1": "a", "s2": "a", "s3": "a"}
        result = validator.validate_matrix(two_cluster_matrix, bad)
        assert {"UNLABELED_SERIES", "SINGLE_CLUSTER"} <= result.codes()
