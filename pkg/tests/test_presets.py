"""
Tests for the benchmark preset loader.
"""

from pathlib import Path

import pytest

from chuk_mcp_tsdist.core import ConfigurationError
from chuk_mcp_tsdist.presets import PresetLoader


def write_preset(directory: Path, name: str, text: str) -> Path:
    """Write a YAML preset file."""
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{name}.yaml"
    path.write_text(text)
    return path


class TestLibraryPresets:
    """Tests for the built-in presets."""

    def test_list(self) -> None:
        """Both library presets are listed in name order."""
        names = [p.name for p in PresetLoader().list_presets()]
        assert names == sorted(names)
        assert {"quick", "table1"} <= set(names)

    def test_table1(self) -> None:
        """Five elastic distances and their segmented counterparts."""
        preset = PresetLoader().require_preset("table1")
        assert preset.algorithm_names == [
            "dtw", "sdtw", "cidtw", "scidtw", "ddtw", "sddtw", "wdtw", "swdtw", "wddtw", "swddtw",
        ]
        assert all(c.q == 0.99 and c.g == 0.01 and c.w_max == 1.0 for c in preset.algorithms)

    def test_quick(self) -> None:
        """dtw against sdtw."""
        preset = PresetLoader().require_preset("quick")
        assert preset.algorithm_names == ["dtw", "sdtw"]

    def test_cached(self) -> None:
        """Repeated lookups return the same object."""
        loader = PresetLoader()
        assert loader.get_preset("quick") is loader.get_preset("quick")


class TestProjectPresets:
    """Tests for project preset directories."""

    def test_project_overrides_library(self, temp_dir: Path) -> None:
        """A project file with a library name wins."""
        write_preset(temp_dir, "quick", "algorithms:\n  - cidtw\n")
        loader = PresetLoader(project_path=temp_dir)
        assert loader.require_preset("quick").algorithm_names == ["cidtw"]
        listed = {p.name: p for p in loader.list_presets()}
        assert listed["quick"].algorithms == ["cidtw"]
        assert listed["quick"].path == str(temp_dir / "quick.yaml")

    def test_overrides_per_entry(self, temp_dir: Path) -> None:
        """Entry values beat defaults."""
        text = (
            "name: tuned\n"
            "defaults:\n  q: 0.9\n"
            "algorithms:\n"
            "  - sdtw\n"
            "  - name: swdtw\n    q: 0.95\n    g: 0.1\n"
        )
        write_preset(temp_dir, "tuned", text)
        preset = PresetLoader(project_path=temp_dir).require_preset("tuned")
        assert [c.q for c in preset.algorithms] == [0.9, 0.95]
        assert preset.algorithms[1].g == 0.1

    def test_name_defaults_to_stem(self, temp_dir: Path) -> None:
        """Files without a name use their stem."""
        write_preset(temp_dir, "stemmed", "algorithms: [dtw]\n")
        assert PresetLoader(project_path=temp_dir).require_preset("stemmed").name == "stemmed"

    @pytest.mark.parametrize(
        "text",
        [
            "algorithms: [: bad yaml\n",
            "- just\n- a list\n",
            "algorithms: [lcss]\n",
            "algorithms: []\n",
            "algorithms:\n  - q: 0.5\n",
            "algorithms:\n  - name: sdtw\n    q: 2.0\n",
        ],
    )
    def test_malformed_files_are_skipped(self, temp_dir: Path, text: str) -> None:
        """Broken files are logged and ignored."""
        write_preset(temp_dir, "broken", text)
        loader = PresetLoader(project_path=temp_dir)
        assert loader.get_preset("broken") is None
        assert "broken" not in [p.name for p in loader.list_presets()]

    def test_missing_preset(self) -> None:
        """require_preset raises for unknown names."""
        with pytest.raises(ConfigurationError, match="nope"):
            PresetLoader().require_preset("nope")

    def test_missing_project_directory(self, temp_dir: Path) -> None:
        """Absent project directories fall back to the library."""
        loader = PresetLoader(project_path=temp_dir / "absent")
        assert loader.get_preset("quick") is not None
