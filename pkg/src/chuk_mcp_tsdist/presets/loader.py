"""
Preset loader - discovers and loads benchmark presets.

Presets can come from:
1. Built-in library (shipped with package)
2. Project presets (a user directory of YAML files)
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import yaml
from pydantic import ValidationError

from chuk_mcp_tsdist.constants import ErrorMessages
from chuk_mcp_tsdist.core.errors import ConfigurationError
from chuk_mcp_tsdist.models.config import AlgoConfig, BenchmarkPreset, PresetMetadata

logger = logging.getLogger(__name__)


class PresetLoader:
    """
    Discovers and loads benchmark presets.

    Presets are loaded from YAML files in the library and project directories.
    Project presets override library presets with the same name.
    """

    def __init__(
        self,
        library_path: Path | None = None,
        project_path: Path | None = None,
    ):
        """
        Initialize the preset loader.

        Args:
            library_path: Path to built-in preset library
            project_path: Path to project presets directory
        """
        self.library_path = library_path or (Path(__file__).parent / "library")
        self.project_path = project_path
        self._cache: dict[str, BenchmarkPreset] = {}

    def _search_paths(self) -> list[Path]:
        # Later entries win
        paths = [self.library_path]
        if self.project_path:
            paths.append(self.project_path)
        return [p for p in paths if p.exists()]

    def list_presets(self) -> list[PresetMetadata]:
        """
        List all available presets, sorted by name.

        Project presets take precedence over library presets.
        """
        presets: dict[str, PresetMetadata] = {}
        for directory in self._search_paths():
            for path in sorted(directory.glob("*.yaml")):
                preset = self._load_preset_file(path)
                if preset:
                    presets[preset.name] = PresetMetadata.from_preset(preset, str(path))
        return [presets[name] for name in sorted(presets)]

    def get_preset(self, name: str) -> BenchmarkPreset | None:
        """
        Get a preset by name.

        Args:
            name: Preset name (file stem)

        Returns:
            BenchmarkPreset if found, None otherwise
        """
        if name in self._cache:
            return self._cache[name]

        for directory in reversed(self._search_paths()):
            candidate = directory / f"{name}.yaml"
            if candidate.exists():
                preset = self._load_preset_file(candidate)
                if preset:
                    self._cache[name] = preset
                    return preset
        return None

    def require_preset(self, name: str) -> BenchmarkPreset:
        """
        Get a preset by name or raise.

        Raises:
            ConfigurationError: if no preset has that name
        """
        preset = self.get_preset(name)
        if preset is None:
            raise ConfigurationError(ErrorMessages.PRESET_NOT_FOUND.format(name=name))
        return preset

    def _load_preset_file(self, path: Path) -> BenchmarkPreset | None:
        """Load a preset from a YAML file; unreadable files are skipped."""
        try:
            with open(path) as f:
                data = yaml.safe_load(f)
            return self._parse_preset(data, default_name=path.stem)
        except (OSError, yaml.YAMLError, ValidationError, ConfigurationError) as e:
            logger.warning(f"Skipping preset file {path}: {e}")
            return None

    def _parse_preset(self, data: dict[str, Any], default_name: str) -> BenchmarkPreset:
        """
        Parse preset from YAML data.

        Each algorithm entry is either a bare name ('sdtw') or a mapping with
        a 'name' key plus AlgoConfig overrides. Top-level 'defaults' apply to
        every entry.
        """
        if not isinstance(data, dict):
            raise ConfigurationError("Preset file must contain a mapping")

        defaults = dict(data.get("defaults") or {})
        algorithms = []
        for entry in data.get("algorithms") or []:
            if isinstance(entry, str):
                name, overrides = entry, {}
            elif isinstance(entry, dict) and "name" in entry:
                overrides = dict(entry)
                name = overrides.pop("name")
            else:
                raise ConfigurationError(f"Algorithm entry needs a name: {entry!r}")
            algorithms.append(AlgoConfig.from_name(name, **{**defaults, **overrides}))

        return BenchmarkPreset(
            schema=data.get("schema", "preset/v1"),
            name=data.get("name", default_name),
            description=data.get("description", ""),
            algorithms=algorithms,
        )
