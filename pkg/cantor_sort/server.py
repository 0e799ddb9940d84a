"""Cantor sort MCP server entry point."""

from __future__ import annotations

from mcp.server.fastmcp import FastMCP

from .tools import register_all_tools

mcp = FastMCP("cantor_sort")

register_all_tools(mcp)


def main():
    """Run the MCP server."""
    mcp.run()


if __name__ == "__main__":
    main()
