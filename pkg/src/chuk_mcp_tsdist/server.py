#!/usr/bin/env python3
"""
Entry point for the CHUK Time Series Distance MCP Server.

This module provides the main entry point for the MCP server,
supporting multiple transport modes (stdio, http). Server-wide settings
are passed to the tool modules through the environment, so they must be
in place before async_server is imported.
"""

import argparse
import asyncio
import logging
import os
from pathlib import Path

from chuk_mcp_tsdist.constants import PRESETS_ENV_VAR, THREADS_ENV_VAR
from chuk_mcp_tsdist.core.errors import ConfigurationError
from chuk_mcp_tsdist.models.config import RuntimeSettings

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def main() -> None:
    """Main entry point with transport detection."""
    parser = argparse.ArgumentParser(description="CHUK Time Series Distance MCP Server")
    parser.add_argument(
        "--transport",
        choices=["stdio", "http"],
        default="stdio",
        help="Transport mode (default: stdio)",
    )
    parser.add_argument(
        "--port",
        type=int,
        default=8000,
        help="HTTP port (only for http transport)",
    )
    parser.add_argument(
        "--presets-dir",
        type=Path,
        help="Project preset directory (default: ./presets)",
    )
    parser.add_argument(
        "--threads",
        type=int,
        help=f"Worker threads for distance matrices (default: ${THREADS_ENV_VAR} or all cores)",
    )
    parser.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug logging",
    )

    args = parser.parse_args()

    if args.debug:
        logging.getLogger().setLevel(logging.DEBUG)

    if args.presets_dir is not None:
        os.environ[PRESETS_ENV_VAR] = str(args.presets_dir.resolve())
    if args.threads is not None:
        os.environ[THREADS_ENV_VAR] = str(args.threads)
    try:
        settings = RuntimeSettings.from_env()
    except ConfigurationError as e:
        parser.error(str(e))
    logger.info(f"Distance matrices use n_jobs={settings.n_jobs}")

    # Import after the environment is settled; the module registers tools on import
    from chuk_mcp_tsdist.async_server import mcp

    if args.transport == "stdio":
        logger.info("Starting CHUK Time Series Distance MCP Server (stdio)")
        asyncio.run(mcp.run_stdio())
    else:
        logger.info(f"Starting CHUK Time Series Distance MCP Server (http:{args.port})")
        asyncio.run(mcp.run_http(port=args.port))


if __name__ == "__main__":
    main()
