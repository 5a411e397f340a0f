"""
Pydantic models for configuration.

This module provides:
- AlgoConfig: algorithm selection plus hyperparameters
- BenchmarkPreset: named list of configs evaluated together
- PresetMetadata: lightweight preset listing entry
- RuntimeSettings: environment-driven process settings
"""

from chuk_mcp_tsdist.models.config import (
    AlgoConfig,
    BenchmarkPreset,
    PresetMetadata,
    RuntimeSettings,
)

__all__ = [
    "AlgoConfig",
    "BenchmarkPreset",
    "PresetMetadata",
    "RuntimeSettings",
]
