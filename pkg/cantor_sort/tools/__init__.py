"""MCP tool implementations for Cantor-key sorting."""

from .analysis import register_analysis_tools
from .bench import register_bench_tools
from .sorting import register_sorting_tools

__all__ = [
    "register_sorting_tools",
    "register_analysis_tools",
    "register_bench_tools",
]


def register_all_tools(mcp):
    """Register all tools with the MCP server."""
    register_sorting_tools(mcp)
    register_analysis_tools(mcp)
    register_bench_tools(mcp)
