"""Precision-budget analysis tool."""

from __future__ import annotations

import asyncio

from mcp.server.fastmcp import Context

from ..alphabet import derive_radix
from ..config import EPSILON, MANTISSA_BITS
from ..keying import precision_report
from ..models import OutputFormat
from ..utils import error_response, format_output, handle_exception
from ..validation import validate_mantissa_bits
from .sorting import READ_ONLY, resolve_alphabet

MAX_PROBE_SAMPLES = 10_000


def register_analysis_tools(mcp):
    """Register analysis tools with the MCP server."""

    @mcp.tool(
        name="cantor_analyze_precision",
        annotations={"title": "Analyze the Precision Budget", **READ_ONLY},
    )
    async def cantor_analyze_precision(
        epsilon: int = EPSILON,
        alphabet: str | None = None,
        mantissa_bits: int = MANTISSA_BITS,
        probe_samples: int = 0,
        seed: int = 0,
        format: str = "json",
        ctx: Context | None = None,
    ) -> str:
        """Report the radix, minimum gaps and safe chunk length for an alphabet.

        With probe_samples > 0, adversarial string pairs that differ only at
        the last position are keyed at the safe chunk length and one past it,
        and order violations are counted.

        Args:
            epsilon: Radix headroom, at least 2 (default 4).
            alphabet: Symbols in sort order as one string (default a-z).
            mantissa_bits: Float mantissa precision to analyze (default 53).
            probe_samples: Adversarial pairs per rank to test (0 skips probing).
            seed: Random seed for the probe prefixes.
            format: json for the full report, csv for the minimum-gap table.

        Returns:
            str: Precision report as JSON, or min_gap rows as CSV.
        """
        if not 0 <= probe_samples <= MAX_PROBE_SAMPLES:
            return error_response(
                f"probe_samples must be between 0 and {MAX_PROBE_SAMPLES}.", "configuration_error"
            )
        if format.lower() not in (OutputFormat.JSON.value, OutputFormat.CSV.value):
            return error_response(f"Unknown format {format!r}.", "configuration_error")

        try:
            bits = validate_mantissa_bits(mantissa_bits)
            resolved = resolve_alphabet(alphabet)
            radix = derive_radix(resolved, epsilon, bits)
            report = await asyncio.to_thread(
                precision_report, resolved, radix, probe_samples, seed
            )
        except Exception as e:
            return handle_exception(e)

        if format.lower() == OutputFormat.CSV.value:
            return format_output(
                [gap.model_dump() for gap in report.min_gaps], OutputFormat.CSV
            )
        return report.model_dump_json(indent=2)
