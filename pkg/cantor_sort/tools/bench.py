"""Benchmark tool."""

from __future__ import annotations

import asyncio

from mcp.server.fastmcp import Context

from ..bench import generate_corpus, report_to_csv, report_to_json, run_benchmark
from ..config import EPSILON, MAX_STRINGS
from ..models import CorpusKind, CorpusSpec
from ..utils import error_response, handle_exception
from .sorting import READ_ONLY, resolve_sort_config


def register_bench_tools(mcp):
    """Register benchmark tools with the MCP server."""

    @mcp.tool(
        name="cantor_run_benchmark",
        annotations={"title": "Benchmark String Sorters", **READ_ONLY},
    )
    async def cantor_run_benchmark(
        kind: str = CorpusKind.RANDOM_UNIFORM.value,
        n: int = 1000,
        len_min: int = 0,
        len_max: int = 64,
        prefix_len: int | None = None,
        seed: int = 0,
        algorithms: list[str] | None = None,
        epsilon: int = EPSILON,
        chunk_len: int | None = None,
        alphabet: str | None = None,
        path: str | None = None,
        format: str = "json",
        ctx: Context | None = None,
    ) -> str:
        """Generate a corpus and compare sorters by instrumented comparison counts.

        Every algorithm must produce the same permutation; a disagreement is
        reported as a verification error.

        Args:
            kind: random-uniform, shared-prefix, dictionary-file, all-equal
                or near-tie-adversarial.
            n: Number of strings.
            len_min: Shortest string length.
            len_max: Longest string length.
            prefix_len: Shared-prefix length, or the differing position for
                near-tie-adversarial (default: chunk length - 1 there, else 0).
            seed: Random seed; the same seed gives the same corpus.
            algorithms: Any of cantor, baseline, cached, splitwise:<k>
                (default cantor and baseline).
            epsilon: Radix headroom, at least 2 (default 4).
            chunk_len: Chunk length (default: precision budget).
            alphabet: Symbols in sort order as one string (default a-z).
            path: Word list for dictionary-file corpora.
            format: json or csv (default json).

        Returns:
            str: Benchmark report with one record per algorithm.
        """
        if kind not in {k.value for k in CorpusKind}:
            return error_response(f"Unknown corpus kind {kind!r}.", "configuration_error")
        if n > MAX_STRINGS:
            return error_response(
                f"n={n} exceeds the limit of {MAX_STRINGS}.", "too_many_strings"
            )

        try:
            config = resolve_sort_config(alphabet, epsilon, chunk_len)
            corpus_kind = CorpusKind(kind)
            if prefix_len is None:
                adversarial = corpus_kind == CorpusKind.NEAR_TIE_ADVERSARIAL
                prefix_len = config.chunk_len - 1 if adversarial else 0
            spec = CorpusSpec(
                kind=corpus_kind,
                n=n,
                len_min=len_min,
                len_max=len_max,
                prefix_len=prefix_len,
                seed=seed,
                path=path,
            )
            corpus = generate_corpus(spec, config.alphabet)
            report = await asyncio.to_thread(
                run_benchmark, corpus, algorithms or ["cantor", "baseline"], config, spec
            )
        except Exception as e:
            return handle_exception(e)

        if format.lower() == "csv":
            return report_to_csv(report)
        return report_to_json(report)
