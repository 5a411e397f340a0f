#!/usr/bin/env python3
"""
Async time series distance MCP server using chuk-mcp-server.

The server provides tools for:
- Elastic distances (DTW, CIDTW, DDTW, WDTW, WDDTW) and their segmented variants
- Quantile-threshold segmentation of a series
- Silhouette scoring of a precomputed distance matrix
- Benchmark preset discovery
"""

import logging
import os
from pathlib import Path

from chuk_mcp_server import ChukMCPServer

from chuk_mcp_tsdist.constants import PRESETS_ENV_VAR
from chuk_mcp_tsdist.presets import PresetLoader
from chuk_mcp_tsdist.tools import register_distance_tools, register_evaluation_tools

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

# Create the MCP server instance
mcp = ChukMCPServer("chuk-mcp-tsdist")

# Paths - project presets default to ./presets under the working directory
PRESETS_DIR = Path(os.environ.get(PRESETS_ENV_VAR) or Path.cwd() / "presets")
PRESETS_LIBRARY_PATH = Path(__file__).parent / "presets" / "library"

preset_loader = PresetLoader(
    library_path=PRESETS_LIBRARY_PATH,
    project_path=PRESETS_DIR,
)

# Register all tools
distance_tools = register_distance_tools(mcp)
evaluation_tools = register_evaluation_tools(mcp, preset_loader)

# Export tool functions for direct access
tsdist_distance = distance_tools["tsdist_distance"]
tsdist_segment = distance_tools["tsdist_segment"]

tsdist_silhouette = evaluation_tools["tsdist_silhouette"]
tsdist_list_presets = evaluation_tools["tsdist_list_presets"]
tsdist_describe_preset = evaluation_tools["tsdist_describe_preset"]

logger.info("CHUK Time Series Distance MCP Server initialized")
logger.info(f"  Preset library: {PRESETS_LIBRARY_PATH}")
logger.info(f"  Project presets: {PRESETS_DIR}")
