"""Base enums shared by the library, CLI and MCP tools."""

from __future__ import annotations

from enum import Enum, IntEnum


class OutputFormat(str, Enum):
    """Output format for results."""

    TEXT = "text"
    JSON = "json"
    CSV = "csv"


class Ordering(IntEnum):
    """Three-way comparison result, usable directly as a ``cmp`` value."""

    LESS = -1
    EQUAL = 0
    GREATER = 1
