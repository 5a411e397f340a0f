"""
MCP tool implementations.

Tools are organized by domain:
- distance - Pairwise distances and segmentation
- evaluation - Silhouette scoring and benchmark presets
"""

from chuk_mcp_tsdist.tools.distance import register_distance_tools
from chuk_mcp_tsdist.tools.evaluation import register_evaluation_tools

__all__ = [
    "register_distance_tools",
    "register_evaluation_tools",
]
