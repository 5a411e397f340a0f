"""
Evaluation tools - MCP tools for silhouette scoring and benchmark presets.
"""

from __future__ import annotations

import json
import logging
from typing import TYPE_CHECKING, Any

from chuk_mcp_tsdist.core.matrix import DistanceMatrix
from chuk_mcp_tsdist.evaluation import silhouette
from chuk_mcp_tsdist.presets import PresetLoader

if TYPE_CHECKING:
    from chuk_mcp_server import ChukMCPServer

logger = logging.getLogger(__name__)


def register_evaluation_tools(mcp: ChukMCPServer, preset_loader: PresetLoader) -> dict[str, Any]:
    """
    Register evaluation tools with the MCP server.

    Args:
        mcp: The MCP server instance
        preset_loader: The preset loader

    Returns:
        Dictionary of registered tool functions
    """
    tools: dict[str, Any] = {}

    @mcp.tool  # type: ignore[arg-type]
    async def tsdist_silhouette(
        matrix: list[list[float]],
        labels: list[str],
        ids: list[str] | None = None,
    ) -> str:
        """
        Silhouette index of a clustering under a distance matrix.

        Args:
            matrix: Symmetric distance matrix with zero diagonal
            labels: Cluster label of each row
            ids: Optional row ids (default s0, s1, ...)

        Returns:
            JSON string with per-series and overall SI

        Example:
            tsdist_silhouette(matrix=[[0,1,10,10],[1,0,10,10],[10,10,0,1],[10,10,1,0]],
                              labels=["x","x","y","y"])
        """
        try:
            row_ids = ids or [f"s{i}" for i in range(len(matrix))]
            dm = DistanceMatrix.from_values(row_ids, matrix)
            report = silhouette(dm, labels)
            return json.dumps({"status": "success", **report.to_dict()})
        except Exception as e:
            logger.exception("Failed to compute silhouette")
            return json.dumps({"status": "error", "message": str(e)})

    tools["tsdist_silhouette"] = tsdist_silhouette

    @mcp.tool  # type: ignore[arg-type]
    async def tsdist_list_presets() -> str:
        """
        List available benchmark presets.

        Returns:
            JSON string with preset names, descriptions and algorithms

        Example:
            tsdist_list_presets()
        """
        try:
            presets = preset_loader.list_presets()
            return json.dumps(
                {
                    "status": "success",
                    "presets": [p.model_dump(exclude={"path"}) for p in presets],
                    "count": len(presets),
                }
            )
        except Exception as e:
            logger.exception("Failed to list presets")
            return json.dumps({"status": "error", "message": str(e)})

    tools["tsdist_list_presets"] = tsdist_list_presets

    @mcp.tool  # type: ignore[arg-type]
    async def tsdist_describe_preset(name: str) -> str:
        """
        Get the full configuration of a benchmark preset.

        Args:
            name: Preset name

        Returns:
            JSON string with every algorithm config

        Example:
            tsdist_describe_preset(name="table1")
        """
        try:
            preset = preset_loader.get_preset(name)
            if preset is None:
                return json.dumps({"status": "error", "message": f"Preset not found: {name}"})

            return json.dumps(
                {
                    "status": "success",
                    "preset": {
                        "name": preset.name,
                        "description": preset.description,
                        "algorithms": [
                            {
                                "name": c.name,
                                "fingerprint": c.fingerprint(),
                                **c.model_dump(mode="json"),
                            }
                            for c in preset.algorithms
                        ],
                    },
                }
            )
        except Exception as e:
            logger.exception("Failed to describe preset")
            return json.dumps({"status": "error", "message": str(e)})

    tools["tsdist_describe_preset"] = tsdist_describe_preset

    return tools
