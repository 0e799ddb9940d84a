"""Sorting and suffix-array tools."""

from __future__ import annotations

import asyncio
import json

from mcp.server.fastmcp import Context

from ..alphabet import Alphabet, build_alphabet, default_alphabet, load_alphabet
from ..config import ALPHABET_FILE, EPSILON, MAX_STRINGS
from ..keying import build_prefix_table
from ..models import OutputFormat
from ..sorting import (
    SORT_ALGORITHMS,
    SortConfig,
    SortOutcome,
    cached_key_sort,
    half_prefix_table,
    make_sort_config,
    run_sort,
    verify_against_baseline,
)
from ..suffix import suffix_array, verify_against_naive
from ..utils import error_response, format_output, handle_exception

READ_ONLY = {
    "readOnlyHint": True,
    "destructiveHint": False,
    "idempotentHint": True,
    "openWorldHint": False,
}


def resolve_alphabet(alphabet: str | None) -> Alphabet:
    """Alphabet from a symbol string, else the configured file, else a-z."""
    if alphabet:
        return build_alphabet(alphabet)
    if ALPHABET_FILE:
        return load_alphabet(ALPHABET_FILE)
    return default_alphabet()


def resolve_sort_config(
    alphabet: str | None,
    epsilon: int,
    chunk_len: int | None = None,
) -> SortConfig:
    """Build a sort configuration from tool parameters.

    Args:
        alphabet: Symbols in sort order as one string; empty uses the server default.
        epsilon: Radix headroom.
        chunk_len: Chunk length; ``None`` uses the precision budget.
    """
    return make_sort_config(resolve_alphabet(alphabet), epsilon, chunk_len)


def sort_payload(
    strings: list[str],
    algorithm: str,
    config: SortConfig,
    verify: bool,
) -> tuple[list[str], SortOutcome]:
    """Sort with the named algorithm, optionally cross-checking the oracle."""
    outcome = run_sort(strings, algorithm, config)
    if verify:
        verify_against_baseline(strings, outcome, config, algorithm)
    return outcome.apply(strings), outcome


def register_sorting_tools(mcp):
    """Register sorting tools with the MCP server."""

    @mcp.tool(
        name="cantor_sort_strings",
        annotations={"title": "Sort Strings by Cantor Keys", **READ_ONLY},
    )
    async def cantor_sort_strings(
        strings: list[str],
        algorithm: str = "cantor",
        chunk_len: int | None = None,
        epsilon: int = EPSILON,
        alphabet: str | None = None,
        verify: bool = False,
        format: str = "json",
        ctx: Context | None = None,
    ) -> str:
        """Sort strings lexicographically using order-preserving float keys.

        Args:
            strings: Strings to sort.
            algorithm: cantor, splitwise, baseline or cached (default cantor).
            chunk_len: Chunk length for cantor/splitwise (default: precision budget).
            epsilon: Radix headroom, at least 2 (default 4).
            alphabet: Symbols in sort order as one string (default a-z).
            verify: Cross-check against the direct comparison sort.
            format: Output format - json or csv (default json).

        Returns:
            str: Sorted strings with comparison counts, in JSON or CSV.
        """
        if len(strings) > MAX_STRINGS:
            return error_response(
                f"{len(strings)} strings exceeds the limit of {MAX_STRINGS}.", "too_many_strings"
            )
        if algorithm not in SORT_ALGORITHMS:
            return error_response(f"Unknown algorithm {algorithm!r}.", "configuration_error")
        if format.lower() not in (OutputFormat.JSON.value, OutputFormat.CSV.value):
            return error_response(f"Unknown format {format!r}.", "configuration_error")

        try:
            config = resolve_sort_config(alphabet, epsilon, chunk_len)
            ordered, outcome = await asyncio.to_thread(
                sort_payload, strings, algorithm, config, verify
            )
        except Exception as e:
            return handle_exception(e)

        rows = [
            {"position": pos, "index": index, "string": s}
            for pos, (index, s) in enumerate(zip(outcome.permutation, ordered))
        ]
        return format_output(
            rows,
            OutputFormat(format.lower()),
            wrapper={
                "algorithm": algorithm,
                "chunk_len": config.chunk_len,
                "sorted": ordered,
                "permutation": list(outcome.permutation),
                "comparisons": outcome.comparisons,
                "element_comparisons": outcome.element_comparisons,
                "preprocess_symbols": outcome.preprocess_symbols,
                "fallbacks": outcome.fallbacks,
                "verified": verify,
            },
        )

    @mcp.tool(
        name="cantor_cached_sort",
        annotations={"title": "Sort Strings with a Prefix Cache", **READ_ONLY},
    )
    async def cantor_cached_sort(
        strings: list[str],
        prefixes: list[str] | None = None,
        epsilon: int = EPSILON,
        alphabet: str | None = None,
        ctx: Context | None = None,
    ) -> str:
        """Sort strings by prefix-cached keys.

        Keys of frequent prefixes are computed once and combined with the key
        of each string's remainder. Near-tied keys are compared directly.

        Args:
            strings: Strings to sort.
            prefixes: Prefixes to cache (default: the first half of every string).
            epsilon: Radix headroom, at least 2 (default 4).
            alphabet: Symbols in sort order as one string (default a-z).

        Returns:
            str: JSON with the sorted strings, symbols encoded and fallback count.
        """
        if len(strings) > MAX_STRINGS:
            return error_response(
                f"{len(strings)} strings exceeds the limit of {MAX_STRINGS}.", "too_many_strings"
            )
        try:
            config = resolve_sort_config(alphabet, epsilon)
            if prefixes is None:
                table = half_prefix_table(strings, config)
            else:
                table = build_prefix_table(prefixes, config.alphabet, config.radix)
            outcome = await asyncio.to_thread(cached_key_sort, strings, table, config)
        except Exception as e:
            return handle_exception(e)

        return json.dumps(
            {
                "sorted": outcome.apply(strings),
                "permutation": list(outcome.permutation),
                "table_size": len(table),
                "preprocess_symbols": outcome.preprocess_symbols,
                "comparisons": outcome.comparisons,
                "fallbacks": outcome.fallbacks,
            },
            indent=2,
        )

    @mcp.tool(
        name="cantor_suffix_array",
        annotations={"title": "Build a Suffix Array", **READ_ONLY},
    )
    async def cantor_suffix_array(
        text: str,
        epsilon: int = EPSILON,
        alphabet: str | None = None,
        verify: bool = False,
        ctx: Context | None = None,
    ) -> str:
        """Build the suffix array of a string from one-pass suffix keys.

        Args:
            text: The string whose suffixes are sorted.
            epsilon: Radix headroom, at least 2 (default 4).
            alphabet: Symbols in sort order as one string (default a-z).
            verify: Cross-check against direct suffix comparison.

        Returns:
            str: JSON with suffix start indices in sorted order and fallback count.
        """
        try:
            config = resolve_sort_config(alphabet, epsilon)
            result = await asyncio.to_thread(suffix_array, text, config.alphabet, config.radix)
            if verify:
                verify_against_naive(text, result, config.alphabet)
        except Exception as e:
            return handle_exception(e)

        return json.dumps(
            {
                "source_len": len(text),
                "order": list(result.order),
                "comparisons": result.comparisons,
                "fallback_count": result.fallback_count,
                "verified": verify,
            },
            indent=2,
        )
