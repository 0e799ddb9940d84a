"""Utility functions for instrumentation, formatting and error payloads."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any

from pydantic import ValidationError

from .config import logger
from .models import OutputFormat
from .validation import (
    ConfigurationError,
    EncodingError,
    MonotonicityError,
    UsageError,
    VerificationError,
)


@dataclass
class ComparisonCounter:
    """Instrumentation for comparators.

    Attributes:
        calls: Comparator invocations (key or string comparisons).
        elements: Chunk values or characters inspected across all calls.
        fallbacks: Near-tie comparisons that had to compare strings directly.
    """

    calls: int = 0
    elements: int = 0
    fallbacks: int = 0


def rows_to_csv(rows: list[dict[str, Any]]) -> str:
    """Convert list of dicts to CSV string."""
    if not rows:
        return ""
    output = io.StringIO()
    writer = csv.DictWriter(output, fieldnames=rows[0].keys(), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return output.getvalue()


def format_output(
    rows: list[dict[str, Any]],
    output_format: OutputFormat,
    wrapper: dict[str, Any] | None = None,
) -> str:
    """Format result rows as JSON or CSV.

    Args:
        rows: List of row dictionaries.
        output_format: Desired output format.
        wrapper: Optional dict to emit instead of the bare rows for JSON output.

    Returns:
        Formatted string in requested format.
    """
    if output_format == OutputFormat.CSV:
        return rows_to_csv(rows)

    if wrapper is not None:
        return json.dumps(wrapper, indent=2)

    return json.dumps(rows, indent=2)


def error_response(message: str, code: str = "error") -> str:
    """Create a consistent JSON error response.

    Args:
        message: Human-readable error description.
        code: Error code for programmatic handling.

    Returns:
        JSON string with error details.
    """
    return json.dumps({"error": message, "code": code})


def handle_exception(e: Exception) -> str:
    """Map toolkit exceptions to JSON error responses with specific codes.

    Args:
        e: The exception to handle.

    Returns:
        JSON error response string.
    """
    if isinstance(e, MonotonicityError):
        return error_response(str(e), "monotonicity_error")
    if isinstance(e, ConfigurationError):
        return error_response(str(e), "configuration_error")
    if isinstance(e, ValidationError):
        return error_response(str(e), "configuration_error")
    if isinstance(e, EncodingError):
        return error_response(str(e), "encoding_error")
    if isinstance(e, UsageError):
        return error_response(str(e), "usage_error")
    if isinstance(e, VerificationError):
        logger.error("Verification failed: %s", e)
        return error_response(str(e), "verification_failed")
    if isinstance(e, UnicodeDecodeError):
        logger.error("Undecodable input: %s", e)
        return error_response(
            f"Input is not valid UTF-8: {e.reason} at byte {e.start}.", "io_error"
        )
    if isinstance(e, OSError):
        logger.error("I/O error: %s", e)
        return error_response(f"Could not read input: {e}", "io_error")
    # Unknown exception - log full details, return generic message
    logger.exception("Unexpected error: %s", e)
    return error_response("An unexpected error occurred.", "internal_error")


def exit_code_for(e: Exception) -> int:
    """CLI exit status for an exception: 1 for verification, 2 otherwise."""
    return 1 if isinstance(e, VerificationError) else 2
