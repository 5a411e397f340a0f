"""Tests for chuk-mcp-tsdist."""
