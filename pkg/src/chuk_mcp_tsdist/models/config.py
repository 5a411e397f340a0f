"""
Configuration models - algorithm selection, benchmark presets, runtime settings.

AlgoConfig is the single description of "which distance, with which
hyperparameters". Everything that computes a distance is built from one.
"""

from __future__ import annotations

import math
import os
from collections.abc import Mapping
from typing import Any

from pydantic import BaseModel, Field, ValidationError, model_validator

from chuk_mcp_tsdist.constants import (
    ALGORITHM_NAMES,
    DEFAULT_PENALTY,
    DEFAULT_QUANTILE,
    DEFAULT_WEIGHT_MAX,
    THREADS_ENV_VAR,
    BaseAlgorithm,
    ErrorMessages,
    MidpointRule,
    SchemaVersion,
)
from chuk_mcp_tsdist.core.errors import ConfigurationError

_WEIGHTED = (BaseAlgorithm.WDTW, BaseAlgorithm.WDDTW)


class AlgoConfig(BaseModel):
    """
    Algorithm selection plus hyperparameters.

    q, threshold only matter when spd_enabled; g, w_max, midpoint_rule, n_c
    only matter for the weighted bases.
    """

    base: BaseAlgorithm = Field(BaseAlgorithm.DTW, description="Base distance algorithm")
    spd_enabled: bool = Field(False, description="Wrap the base in the SPD combinator")
    q: float = Field(DEFAULT_QUANTILE, ge=0.0, le=1.0, description="Segmentation quantile")
    g: float = Field(DEFAULT_PENALTY, ge=0.0, description="Logistic phase penalty")
    w_max: float = Field(DEFAULT_WEIGHT_MAX, gt=0.0, description="Weight ceiling")
    midpoint_rule: MidpointRule = Field(
        MidpointRule.HALF_LONGER, description="How the logistic midpoint n_c is chosen"
    )
    n_c: float | None = Field(None, description="Logistic midpoint for the fixed rule")
    threshold: float | None = Field(
        None, ge=0.0, description="Absolute segmentation threshold overriding q (may be inf)"
    )
    znormalize: bool = Field(False, description="Z-normalize both series before comparing")

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def check_midpoint(self) -> AlgoConfig:
        """A fixed midpoint rule needs an explicit n_c."""
        if self.midpoint_rule == MidpointRule.FIXED and self.n_c is None:
            raise ValueError("midpoint_rule 'fixed' requires n_c")
        return self

    @classmethod
    def from_name(cls, name: str, **overrides: Any) -> AlgoConfig:
        """
        Build a config from a table-style name like 'scidtw' or 'wdtw'.

        Args:
            name: Algorithm name (see constants.ALGORITHM_NAMES)
            **overrides: Any other AlgoConfig field

        Returns:
            The validated config

        Raises:
            ConfigurationError: unknown name or invalid hyperparameters
        """
        key = name.strip().lower()
        if key not in ALGORITHM_NAMES:
            raise ConfigurationError(
                ErrorMessages.UNKNOWN_ALGORITHM.format(name=name, choices=sorted(ALGORITHM_NAMES))
            )
        base, spd = ALGORITHM_NAMES[key]
        params = {k: v for k, v in overrides.items() if v is not None}
        try:
            return cls(base=base, spd_enabled=spd, **params)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid configuration for '{name}': {e}") from e

    @property
    def name(self) -> str:
        """Table-style name, e.g. 'swdtw'."""
        base = "euclidean" if self.base == BaseAlgorithm.EUCLIDEAN_LOCKSTEP else self.base.value
        return f"s{base}" if self.spd_enabled else base

    @property
    def is_weighted(self) -> bool:
        """True for WDTW and WDDTW bases."""
        return self.base in _WEIGHTED

    def fingerprint(self) -> str:
        """
        Stable identity string of every parameter that affects distances.

        Irrelevant parameters are omitted, so 'dtw' and 'dtw' with a
        different q share a fingerprint.
        """
        parts = [self.name]
        if self.spd_enabled:
            if self.threshold is not None:
                parts.append(f"threshold={_fmt(self.threshold)}")
            else:
                parts.append(f"q={_fmt(self.q)}")
        if self.is_weighted:
            parts.append(f"g={_fmt(self.g)}")
            parts.append(f"w_max={_fmt(self.w_max)}")
            if self.midpoint_rule == MidpointRule.FIXED:
                parts.append(f"n_c={_fmt(self.n_c)}")
            else:
                parts.append(f"n_c={self.midpoint_rule.value}")
        if self.znormalize:
            parts.append("znorm")
        return ";".join(parts)


def _fmt(value: float | None) -> str:
    if value is None:
        return "none"
    if math.isinf(value):
        return "inf"
    return f"{value:g}"


class BenchmarkPreset(BaseModel):
    """
    A named list of algorithm configs evaluated together.

    Presets come from YAML files in the preset library or a project
    directory (see presets.PresetLoader).
    """

    schema_version: SchemaVersion = Field(
        "preset/v1", alias="schema", description="Schema version"
    )
    name: str = Field(..., description="Preset name")
    description: str = Field("", description="Human-readable description")
    algorithms: list[AlgoConfig] = Field(..., min_length=1, description="Configs to evaluate")

    model_config = {"populate_by_name": True}

    @property
    def algorithm_names(self) -> list[str]:
        """Table-style names of the configs, in order."""
        return [a.name for a in self.algorithms]


class PresetMetadata(BaseModel):
    """Lightweight preset metadata for listing."""

    name: str
    description: str = ""
    algorithms: list[str] = Field(default_factory=list)
    path: str | None = None

    @classmethod
    def from_preset(cls, preset: BenchmarkPreset, path: str | None = None) -> PresetMetadata:
        """Create metadata from a full preset."""
        return cls(
            name=preset.name,
            description=preset.description,
            algorithms=preset.algorithm_names,
            path=path,
        )


class RuntimeSettings(BaseModel):
    """
    Process-level settings read from the environment.

    threads = 0 means "use every core".
    """

    threads: int = Field(0, ge=0, description="Worker pool bound (0 = auto)")

    model_config = {"frozen": True}

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> RuntimeSettings:
        """Read TSDIST_THREADS."""
        env = os.environ if environ is None else environ
        raw = env.get(THREADS_ENV_VAR, "").strip()
        if not raw:
            return cls()
        try:
            return cls(threads=int(raw))
        except (ValueError, ValidationError) as e:
            raise ConfigurationError(
                f"{THREADS_ENV_VAR} must be a non-negative integer, got '{raw}'"
            ) from e

    @property
    def n_jobs(self) -> int:
        """joblib n_jobs equivalent."""
        return -1 if self.threads == 0 else self.threads
