"""
Benchmark presets - YAML library of algorithm lists.
"""

from chuk_mcp_tsdist.presets.loader import PresetLoader

__all__ = ["PresetLoader"]
