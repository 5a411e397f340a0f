"""
Distance tools - MCP tools for computing distances and segmentations.

Series are passed inline as lists of numbers (univariate) or lists of
points (multivariate).
"""

from __future__ import annotations

import json
import logging
from typing import TYPE_CHECKING, Any

from chuk_mcp_tsdist.core.series import TimeSeries
from chuk_mcp_tsdist.models.config import AlgoConfig
from chuk_mcp_tsdist.spd import make_spd_variant, segment_series

if TYPE_CHECKING:
    from chuk_mcp_server import ChukMCPServer

logger = logging.getLogger(__name__)


def register_distance_tools(mcp: ChukMCPServer) -> dict[str, Any]:
    """
    Register distance tools with the MCP server.

    Args:
        mcp: The MCP server instance

    Returns:
        Dictionary of registered tool functions
    """
    tools: dict[str, Any] = {}

    @mcp.tool  # type: ignore[arg-type]
    async def tsdist_distance(
        a: list[Any],
        b: list[Any],
        algo: str = "dtw",
        q: float | None = None,
        g: float | None = None,
        w_max: float | None = None,
        threshold: float | None = None,
    ) -> str:
        """
        Compute the distance between two time series.

        SPD variants (sdtw, scidtw, sddtw, swdtw, swddtw) also report the
        normalized distance and both segmentations.

        Args:
            a: First series, e.g. [4, 5, 6, 1, 2, 3]
            b: Second series with the same dimension
            algo: dtw, cidtw, ddtw, wdtw, wddtw, euclidean, or an SPD variant
            q: Segmentation quantile (SPD only, default 0.99)
            g: Phase penalty (weighted variants, default 0.01)
            w_max: Weight ceiling (weighted variants, default 1)
            threshold: Absolute segmentation threshold overriding q

        Returns:
            JSON string with the distance

        Example:
            tsdist_distance(a=[4,5,6,1,2,3,7,8,9], b=[1,2,3,7,8,9,4,6,5], algo="sdtw", threshold=2)
        """
        try:
            config = AlgoConfig.from_name(algo, q=q, g=g, w_max=w_max, threshold=threshold)
            sa = TimeSeries.from_values(a, "a")
            sb = TimeSeries.from_values(b, "b")
            measure = make_spd_variant(config)

            result: dict[str, Any] = {
                "status": "success",
                "algorithm": config.name,
                "fingerprint": config.fingerprint(),
            }
            if config.spd_enabled:
                breakdown = measure.breakdown(sa, sb)
                result["raw"] = breakdown.raw
                result["normalized"] = breakdown.normalized
                result["segments_a"] = breakdown.segmentation_a.segments
                result["segments_b"] = breakdown.segmentation_b.segments
            else:
                result["raw"] = measure(sa, sb)
            return json.dumps(result)
        except Exception as e:
            logger.exception("Failed to compute distance")
            return json.dumps({"status": "error", "message": str(e)})

    tools["tsdist_distance"] = tsdist_distance

    @mcp.tool  # type: ignore[arg-type]
    async def tsdist_segment(
        values: list[Any],
        q: float = 0.99,
        threshold: float | None = None,
    ) -> str:
        """
        Cut a time series at its large discontinuities.

        Args:
            values: The series
            q: Quantile of consecutive distances used as threshold
            threshold: Absolute threshold overriding q

        Returns:
            JSON string with threshold, cut points and segment ranges (1-based)

        Example:
            tsdist_segment(values=[4,5,6,1,2,3,7,8,9], threshold=2)
        """
        try:
            series = TimeSeries.from_values(values, "series")
            result = segment_series(series, q, threshold)
            return json.dumps({"status": "success", **result.to_dict()})
        except Exception as e:
            logger.exception("Failed to segment series")
            return json.dumps({"status": "error", "message": str(e)})

    tools["tsdist_segment"] = tsdist_segment

    return tools
