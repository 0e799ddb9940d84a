"""Benchmark harness: corpus generation, instrumented runs and reports.

Reports carry comparison counts from instrumented comparators rather than
timing-derived estimates, so two runs over the same seed agree on every
field except ``wall_time_s``.
"""

from __future__ import annotations

import math
import platform
import random
import re
import time
from collections.abc import Iterable, Sequence
from pathlib import Path

from .alphabet import Alphabet
from .config import logger
from .models import AlgorithmRecord, BenchReport, CorpusKind, CorpusSpec
from .sorting import (
    SortConfig,
    SortOutcome,
    run_sort,
    splitwise_sort,
)
from .utils import rows_to_csv
from .validation import ConfigurationError, VerificationError

ALGORITHMS = ("cantor", "baseline", "cached")
_SPLITWISE = re.compile(r"^splitwise[:(](\d+)\)?$")

# Allowed growth of the comparison count per doubling, on top of n log n.
GROWTH_SLACK = 1.05


# ---------------------------------------------------------------------------
# Corpora
# ---------------------------------------------------------------------------


def _random_string(rng: random.Random, symbols: Sequence[str], length: int) -> str:
    return "".join(rng.choices(symbols, k=length))


def _read_dictionary(spec: CorpusSpec, alphabet: Alphabet) -> list[str]:
    assert spec.path is not None
    words: list[str] = []
    skipped = 0
    for line in Path(spec.path).read_text(encoding="utf-8").splitlines():
        if len(words) >= spec.n:
            break
        word = line.strip()
        if not word:
            continue
        if all(c in alphabet for c in word):
            words.append(word)
        else:
            skipped += 1
    if skipped:
        logger.info("Skipped %d dictionary words with symbols outside the alphabet", skipped)
    return words


def _near_tie_pairs(spec: CorpusSpec, alphabet: Alphabet, rng: random.Random) -> list[str]:
    if alphabet.size < 2:
        raise ConfigurationError("near-tie-adversarial corpora need at least two symbols.")
    symbols = alphabet.symbols
    position = spec.prefix_len
    pad = alphabet.symbols[-1] * max(spec.len_max - position - 1, 0)
    corpus: list[str] = []
    while len(corpus) < spec.n:
        prefix = _random_string(rng, symbols, position)
        r = rng.randrange(alphabet.size - 1)
        corpus.append(prefix + symbols[r] + pad)
        corpus.append(prefix + symbols[r + 1])
    del corpus[spec.n :]
    rng.shuffle(corpus)
    return corpus


def generate_corpus(spec: CorpusSpec, alphabet: Alphabet) -> list[str]:
    """Generate (or read) the corpus ``spec`` describes; deterministic per seed."""
    rng = random.Random(spec.seed)
    symbols = alphabet.symbols

    if spec.kind == CorpusKind.RANDOM_UNIFORM:
        corpus = [
            _random_string(rng, symbols, rng.randint(spec.len_min, spec.len_max))
            for _ in range(spec.n)
        ]
    elif spec.kind == CorpusKind.SHARED_PREFIX:
        prefix = _random_string(rng, symbols, spec.prefix_len)
        low = max(spec.len_min, spec.prefix_len)
        corpus = [
            prefix
            + _random_string(rng, symbols, rng.randint(low, spec.len_max) - spec.prefix_len)
            for _ in range(spec.n)
        ]
    elif spec.kind == CorpusKind.ALL_EQUAL:
        word = _random_string(rng, symbols, rng.randint(spec.len_min, spec.len_max))
        corpus = [word] * spec.n
    elif spec.kind == CorpusKind.NEAR_TIE_ADVERSARIAL:
        corpus = _near_tie_pairs(spec, alphabet, rng)
    else:
        corpus = _read_dictionary(spec, alphabet)

    logger.info(
        "Generated %s corpus of %d strings (seed %d)", spec.kind.value, len(corpus), spec.seed
    )
    return corpus


# ---------------------------------------------------------------------------
# Runs
# ---------------------------------------------------------------------------


def parse_algorithm(name: str) -> str:
    """Normalize an algorithm name; ``splitwise(4)`` becomes ``splitwise:4``.

    Raises:
        ConfigurationError: For unknown names.
    """
    name = name.strip().lower()
    if name in ALGORITHMS:
        return name
    match = _SPLITWISE.match(name)
    if match:
        return f"splitwise:{int(match.group(1))}"
    raise ConfigurationError(
        f"Unknown algorithm {name!r}; expected cantor, baseline, cached or splitwise:<k>."
    )


def _run(algorithm: str, corpus: Sequence[str], config: SortConfig) -> tuple[SortOutcome, int]:
    """Run one algorithm; also return the chunks needed by its longest string."""
    longest = max((len(s) for s in corpus), default=0)
    if algorithm.startswith("splitwise:"):
        k = int(algorithm.split(":", 1)[1])
        return splitwise_sort(corpus, k, config), math.ceil(longest / k)
    outcome = run_sort(corpus, algorithm, config)
    if algorithm == "cantor":
        return outcome, math.ceil(longest / config.chunk_len)
    if algorithm == "cached":
        return outcome, 1 if corpus else 0
    return outcome, 0


def environment_note() -> str:
    return (
        f"{platform.python_implementation()} {platform.python_version()} "
        f"on {platform.system()} {platform.machine()}"
    )


def run_benchmark(
    corpus: Sequence[str],
    algorithms: Iterable[str],
    config: SortConfig,
    spec: CorpusSpec | None = None,
) -> BenchReport:
    """Sort one corpus with every algorithm and cross-check the permutations.

    Raises:
        VerificationError: If any two algorithms disagree on the permutation.
    """
    names = [parse_algorithm(a) for a in algorithms]
    if not names:
        raise ConfigurationError("Select at least one algorithm.")

    records: list[AlgorithmRecord] = []
    reference: tuple[str, tuple[int, ...]] | None = None
    for name in names:
        start = time.perf_counter()
        outcome, max_chunks = _run(name, corpus, config)
        elapsed = time.perf_counter() - start

        if reference is None:
            reference = (name, outcome.permutation)
        elif outcome.permutation != reference[1]:
            raise VerificationError(
                f"{name} and {reference[0]} produced different permutations."
            )

        logger.debug("%s: %.4fs, %d comparisons", name, elapsed, outcome.comparisons)
        records.append(
            AlgorithmRecord(
                algorithm=name,
                n=len(corpus),
                wall_time_s=elapsed,
                comparisons=outcome.comparisons,
                element_comparisons=outcome.element_comparisons,
                preprocess_symbols=outcome.preprocess_symbols,
                peak_key_count=outcome.key_count,
                max_chunks_per_string=max_chunks,
                fallbacks=outcome.fallbacks,
            )
        )

    return BenchReport(
        corpus=spec,
        n=len(corpus),
        total_symbols=sum(len(s) for s in corpus),
        chunk_len=config.chunk_len,
        x=config.radix.x,
        records=records,
        environment=environment_note(),
    )


# ---------------------------------------------------------------------------
# Bounds and reports
# ---------------------------------------------------------------------------


def comparison_bound(n: int) -> float:
    """Merge-sort comparison ceiling ``2 n log2 n``."""
    return 2 * n * math.log2(n) if n > 1 else 0.0


def growth_bound(n: int) -> float:
    """Largest allowed comparison growth factor when ``n`` doubles.

    Below two strings there is nothing to compare, so only the slack applies.
    """
    if n <= 1:
        return GROWTH_SLACK
    return (2 * n * math.log2(2 * n)) / (n * math.log2(n)) * GROWTH_SLACK


def report_to_json(report: BenchReport) -> str:
    return report.model_dump_json(indent=2)


def report_to_csv(report: BenchReport) -> str:
    """One row per algorithm, prefixed with the corpus and radix columns."""
    kind = report.corpus.kind.value if report.corpus else ""
    seed = report.corpus.seed if report.corpus else ""
    rows = [
        {"kind": kind, "seed": seed, "chunk_len": report.chunk_len, "x": report.x}
        | record.model_dump()
        for record in report.records
    ]
    return rows_to_csv(rows)


def write_report(report: BenchReport, path: str | Path) -> None:
    """Write CSV if ``path`` ends in ``.csv``, JSON otherwise."""
    path = Path(path)
    text = report_to_csv(report) if path.suffix.lower() == ".csv" else report_to_json(report)
    path.write_text(text, encoding="utf-8")
    logger.info("Wrote benchmark report to %s", path)
