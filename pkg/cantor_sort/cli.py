"""Command-line front end: sort, suffix, analyze and bench subcommands.

Exit codes: 0 success, 1 verification failure, 2 input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, ValidationError

from .alphabet import Alphabet, default_alphabet, load_alphabet
from .bench import generate_corpus, report_to_json, run_benchmark, write_report
from .config import ALPHABET_FILE, DEFAULT_BENCH_SEED, EPSILON, MANTISSA_BITS, logger
from .keying import precision_report
from .models import BenchReport, CorpusKind, CorpusSpec, OutputFormat, PrecisionReport
from .sorting import SortConfig, make_sort_config, run_sort, verify_against_baseline
from .suffix import suffix_array, verify_against_naive
from .utils import exit_code_for
from .validation import (
    ConfigurationError,
    EncodingError,
    UsageError,
    VerificationError,
)

Subcommand = Literal["sort", "suffix", "analyze", "bench"]
SortAlgorithm = Literal["cantor", "splitwise", "baseline", "cached"]


class CliConfig(BaseModel):
    """Validated command-line settings for one invocation."""

    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input: str | None = None
    alphabet: str | None = None
    epsilon: int = EPSILON
    chunk_len: int | None = None
    output_format: OutputFormat = OutputFormat.TEXT
    output: str | None = None
    verify: bool = False
    seed: int = DEFAULT_BENCH_SEED
    algorithm: SortAlgorithm = "cantor"
    probe_samples: int = 0
    kind: CorpusKind = CorpusKind.RANDOM_UNIFORM
    n: int = 1000
    len_min: int = 0
    len_max: int = 64
    prefix_len: int | None = None
    algorithms: tuple[str, ...] = ("cantor", "baseline")


# ---------------------------------------------------------------------------
# Shared plumbing
# ---------------------------------------------------------------------------


def _alphabet(config: CliConfig) -> Alphabet:
    path = config.alphabet or ALPHABET_FILE
    return load_alphabet(path) if path else default_alphabet()


def _sort_config(config: CliConfig) -> SortConfig:
    return make_sort_config(
        _alphabet(config), config.epsilon, config.chunk_len, MANTISSA_BITS
    )


def _read_lines(config: CliConfig) -> list[str]:
    if config.input in (None, "-"):
        text = sys.stdin.read()
    else:
        text = Path(config.input).read_text(encoding="utf-8")
    lines = text.split("\n")
    if lines[-1] == "":
        lines.pop()
    return lines


def _emit(text: str, config: CliConfig) -> None:
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_sort(config: CliConfig) -> int:
    """Sort input lines and write them to standard output."""
    sort_config = _sort_config(config)
    lines = _read_lines(config)
    outcome = run_sort(lines, config.algorithm, sort_config)
    if config.verify:
        verify_against_baseline(lines, outcome, sort_config, config.algorithm)

    ordered = outcome.apply(lines)
    if config.output_format == OutputFormat.JSON:
        payload = {
            "algorithm": config.algorithm,
            "chunk_len": sort_config.chunk_len,
            "lines": ordered,
            "permutation": list(outcome.permutation),
            "comparisons": outcome.comparisons,
            "preprocess_symbols": outcome.preprocess_symbols,
            "verified": config.verify,
        }
        _emit(json.dumps(payload, indent=2) + "\n", config)
    else:
        _emit("".join(f"{line}\n" for line in ordered), config)
    return 0


def cmd_suffix(config: CliConfig) -> int:
    """Print the suffix array of the first input line."""
    sort_config = _sort_config(config)
    lines = _read_lines(config)
    text = lines[0] if lines else ""
    result = suffix_array(text, sort_config.alphabet, sort_config.radix)

    if config.verify:
        verify_against_naive(text, result, sort_config.alphabet)

    if config.output_format == OutputFormat.JSON:
        payload = {
            "source_len": len(text),
            "order": list(result.order),
            "comparisons": result.comparisons,
            "fallback_count": result.fallback_count,
            "verified": config.verify,
        }
        _emit(json.dumps(payload, indent=2) + "\n", config)
    else:
        _emit("".join(f"{index}\n" for index in result.order), config)
    return 0


def format_precision_report(report: PrecisionReport) -> str:
    lines = [
        f"alphabet_size: {report.alphabet_size}",
        f"zeta: {report.zeta}",
        f"epsilon: {report.epsilon}",
        f"x: {report.x}",
        f"mantissa_bits: {report.mantissa_bits}",
        f"max_chunk_len: {report.max_chunk_len}",
        f"error_bound: {report.error_bound:.6e}",
        f"near_tie_threshold: {report.near_tie_threshold:.6e}",
    ]
    lines += [f"min_gap[{gap.position}]: {gap.min_gap:.6e}" for gap in report.min_gaps]
    lines += [
        f"probe[length={probe.length}]: {probe.violations} violations in {probe.pairs} pairs"
        for probe in report.probes
    ]
    return "\n".join(lines) + "\n"


def cmd_analyze(config: CliConfig) -> int:
    """Print the precision budget of the configured alphabet and epsilon."""
    sort_config = _sort_config(config)
    report = precision_report(
        sort_config.alphabet, sort_config.radix, config.probe_samples, config.seed
    )
    if config.output_format == OutputFormat.JSON:
        _emit(report.model_dump_json(indent=2) + "\n", config)
    else:
        _emit(format_precision_report(report), config)
    return 0


def format_bench_report(report: BenchReport) -> str:
    header = f"{'algorithm':<14}{'comparisons':>14}{'elements':>14}{'preprocess':>12}{'seconds':>10}"
    rows = [
        f"{r.algorithm:<14}{r.comparisons:>14}{r.element_comparisons:>14}"
        f"{r.preprocess_symbols:>12}{r.wall_time_s:>10.4f}"
        for r in report.records
    ]
    return "\n".join([f"n={report.n} k={report.chunk_len} x={report.x}", header, *rows]) + "\n"


def cmd_bench(config: CliConfig) -> int:
    """Generate a corpus, benchmark the selected sorters and report."""
    sort_config = _sort_config(config)
    prefix_len = config.prefix_len
    if prefix_len is None:
        adversarial = config.kind == CorpusKind.NEAR_TIE_ADVERSARIAL
        prefix_len = sort_config.chunk_len - 1 if adversarial else 0

    spec = CorpusSpec(
        kind=config.kind,
        n=config.n,
        len_min=config.len_min,
        len_max=config.len_max,
        prefix_len=prefix_len,
        seed=config.seed,
        path=config.input if config.kind == CorpusKind.DICTIONARY_FILE else None,
    )
    corpus = generate_corpus(spec, sort_config.alphabet)
    report = run_benchmark(corpus, config.algorithms, sort_config, spec)

    if config.output:
        write_report(report, config.output)
    if config.output_format == OutputFormat.JSON:
        sys.stdout.write(report_to_json(report) + "\n")
    else:
        sys.stdout.write(format_bench_report(report))
    return 0


COMMANDS: dict[str, Callable[[CliConfig], int]] = {
    "sort": cmd_sort,
    "suffix": cmd_suffix,
    "analyze": cmd_analyze,
    "bench": cmd_bench,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help="alphabet file, one symbol per line (default a-z)")
    common.add_argument("--epsilon", type=int, default=EPSILON, help="radix headroom (>= 2)")
    common.add_argument("--chunk-len", type=int, help="chunk length (default: precision budget)")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=["text", "json"],
        default="text",
        help="output format",
    )
    common.add_argument("--output", help="write results to this path instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_BENCH_SEED, help="random seed")

    parser = argparse.ArgumentParser(
        prog="cantor-sort",
        description="Sort strings and build suffix arrays with Cantor keys.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    sort = sub.add_parser("sort", parents=[common], help="sort newline-delimited strings")
    sort.add_argument("input", nargs="?", help="input file (default: stdin)")
    sort.add_argument("--verify", action="store_true", help="cross-check with direct sort")
    sort.add_argument(
        "--algorithm",
        choices=["cantor", "splitwise", "baseline", "cached"],
        default="cantor",
    )

    suffix = sub.add_parser("suffix", parents=[common], help="suffix array of the first line")
    suffix.add_argument("input", nargs="?", help="input file (default: stdin)")
    suffix.add_argument("--verify", action="store_true", help="cross-check with naive oracle")

    analyze = sub.add_parser("analyze", parents=[common], help="report the precision budget")
    analyze.add_argument(
        "--probe-samples",
        type=int,
        default=0,
        help="adversarial pairs per position and rank to test at k and k+1",
    )

    bench = sub.add_parser("bench", parents=[common], help="benchmark the sorters")
    bench.add_argument("input", nargs="?", help="dictionary file for --kind dictionary-file")
    bench.add_argument("--kind", choices=[k.value for k in CorpusKind], default="random-uniform")
    bench.add_argument("--n", type=int, default=1000)
    bench.add_argument("--len-min", type=int, default=0)
    bench.add_argument("--len-max", type=int, default=64)
    bench.add_argument("--prefix-len", type=int)
    bench.add_argument(
        "--algorithms",
        default="cantor,baseline",
        help="comma list of cantor, baseline, cached, splitwise:<k>",
    )
    return parser


def parse_config(argv: Sequence[str] | None = None) -> CliConfig:
    args = vars(build_parser().parse_args(argv))
    if isinstance(args.get("algorithms"), str):
        args["algorithms"] = tuple(a for a in args["algorithms"].split(",") if a.strip())
    return CliConfig(**{k: v for k, v in args.items() if v is not None})


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit status."""
    try:
        config = parse_config(argv)
    except ValidationError as e:
        print(f"cantor-sort: invalid arguments: {e}", file=sys.stderr)
        return 2

    try:
        return COMMANDS[config.subcommand](config)
    except EncodingError as e:
        line = 1 if e.index is None else e.index + 1
        print(
            f"cantor-sort: line {line}: symbol {e.symbol!r} at column {e.position + 1} "
            "is not in the alphabet",
            file=sys.stderr,
        )
        return 2
    except (ConfigurationError, UsageError, ValidationError, VerificationError) as e:
        print(f"cantor-sort: {e}", file=sys.stderr)
        return exit_code_for(e)
    except UnicodeDecodeError as e:
        logger.error("Undecodable input: %s", e)
        print(
            f"cantor-sort: cannot read input: not valid UTF-8 ({e.reason} at byte {e.start})",
            file=sys.stderr,
        )
        return 2
    except OSError as e:
        logger.error("I/O error: %s", e)
        print(f"cantor-sort: cannot read input: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
