"""Cantor keys: order-preserving float encodings of strings.

``T(s) = sum(rank(s[i]) / x**i)`` evaluated right to left as
``result = result / x + rank(s[i])``. That recurrence is the normative
evaluation order: every key in the package, including suffix keys and
prefix-cached keys, is built from it so results are bit-reproducible.

A single key is exact only up to ``config.max_chunk_len`` symbols. Longer
strings may still be keyed (suffix keys need it), but only ``ChunkedKey``
carries an ordering guarantee for arbitrary lengths.
"""

from __future__ import annotations

import math
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import NamedTuple

from .alphabet import Alphabet, RadixConfig
from .config import PREFIX_CACHE_ULPS, logger
from .models import GapEntry, Ordering, PrecisionReport, ProbeResult
from .utils import ComparisonCounter
from .validation import ConfigurationError, EncodingError, UsageError, validate_chunk_len

CantorKey = float


def _horner(ranks: Sequence[int], x: float) -> CantorKey:
    result = 0.0
    for r in reversed(ranks):
        result = result / x + r
    return result


def cantor_key(s: str, alphabet: Alphabet, config: RadixConfig) -> CantorKey:
    """Encode ``s`` as a single float key.

    Order is guaranteed for strings of at most ``config.max_chunk_len``
    symbols; beyond that the key is best effort.

    Raises:
        EncodingError: If ``s`` contains a symbol outside the alphabet.
    """
    return _horner(alphabet.encode(s), float(config.x))


def exact_key(s: str, alphabet: Alphabet, config: RadixConfig) -> Fraction:
    """The key of ``s`` as an exact rational, summed left to right."""
    x = Fraction(config.x)
    return sum(
        (Fraction(r) / x**i for i, r in enumerate(alphabet.encode(s))),
        Fraction(0),
    )


def max_key(config: RadixConfig) -> float:
    """Upper bound on any key: an endless run of the largest rank."""
    return config.zeta * config.x / (config.x - 1)


def within_ulps(a: float, b: float, ulps: int = PREFIX_CACHE_ULPS) -> bool:
    """True if ``a`` is within ``ulps`` units in the last place of ``b``."""
    return abs(a - b) <= ulps * math.ulp(b)


# ---------------------------------------------------------------------------
# Chunked keys
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ChunkedKey:
    """One key per length-``chunk_len`` slice of a string, in order."""

    chunks: tuple[CantorKey, ...]
    chunk_len: int
    length: int


def chunked_key(
    s: str,
    alphabet: Alphabet,
    config: RadixConfig,
    k: int | None = None,
) -> ChunkedKey:
    """Split ``s`` into chunks of ``k`` symbols and key each chunk.

    Raises:
        ConfigurationError: If ``k`` is outside ``1..config.max_chunk_len``.
        EncodingError: If ``s`` contains a symbol outside the alphabet.
    """
    if k is None:
        k = config.max_chunk_len
    validate_chunk_len(k, config.max_chunk_len)

    ranks = alphabet.encode(s)
    x = float(config.x)
    chunks = tuple(_horner(ranks[i : i + k], x) for i in range(0, len(ranks), k))
    return ChunkedKey(chunks=chunks, chunk_len=k, length=len(ranks))


def compare_chunked(
    a: ChunkedKey,
    b: ChunkedKey,
    counter: ComparisonCounter | None = None,
) -> Ordering:
    """Compare chunk sequences value by value; a proper prefix sorts first.

    Raises:
        UsageError: If the operands were built with different chunk lengths.
    """
    if a.chunk_len != b.chunk_len:
        raise UsageError(
            f"Cannot compare keys chunked by {a.chunk_len} and {b.chunk_len} symbols."
        )

    inspected = 0
    result = Ordering.EQUAL
    for ca, cb in zip(a.chunks, b.chunks):
        inspected += 1
        if ca != cb:
            result = Ordering.LESS if ca < cb else Ordering.GREATER
            break
    else:
        if len(a.chunks) != len(b.chunks):
            result = Ordering.LESS if len(a.chunks) < len(b.chunks) else Ordering.GREATER

    if counter is not None:
        counter.calls += 1
        counter.elements += inspected
    return result


# ---------------------------------------------------------------------------
# Prefix cache
# ---------------------------------------------------------------------------


class PrefixEntry(NamedTuple):
    key: CantorKey
    length: int


@dataclass(frozen=True)
class PrefixTable:
    """Read-only map from a prefix to its precomputed key and length."""

    entries: Mapping[str, PrefixEntry] = field(default_factory=lambda: MappingProxyType({}))
    max_prefix_len: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, prefix: object) -> bool:
        return prefix in self.entries


def build_prefix_table(
    prefixes: Iterable[str],
    alphabet: Alphabet,
    config: RadixConfig,
) -> PrefixTable:
    """Precompute the key of every prefix."""
    entries = {p: PrefixEntry(cantor_key(p, alphabet, config), len(p)) for p in prefixes}
    logger.debug("Built prefix table with %d entries", len(entries))
    return PrefixTable(
        entries=MappingProxyType(entries),
        max_prefix_len=max((len(p) for p in entries), default=0),
    )


def key_with_prefix_cache(
    s: str,
    table: PrefixTable,
    alphabet: Alphabet,
    config: RadixConfig,
) -> CantorKey:
    """Key ``s`` as ``table[prefix] + key(remainder) / x**len(prefix)``.

    The longest table entry that prefixes ``s`` is used; with no match the
    direct key is returned. The result is within ``PREFIX_CACHE_ULPS`` of
    ``cantor_key(s)`` but not necessarily bit-equal to it.
    """
    return cached_key(s, table, alphabet, config)[0]


def cached_key(
    s: str,
    table: PrefixTable,
    alphabet: Alphabet,
    config: RadixConfig,
) -> tuple[CantorKey, int]:
    """Like ``key_with_prefix_cache`` but also return how many symbols were encoded."""
    x = float(config.x)
    for length in range(min(len(s), table.max_prefix_len), 0, -1):
        entry = table.entries.get(s[:length])
        if entry is None:
            continue
        try:
            remainder = alphabet.encode(s[length:])
        except EncodingError as e:
            raise EncodingError(e.symbol, e.position + length) from None
        return entry.key + _horner(remainder, x) / x**entry.length, len(remainder)
    return cantor_key(s, alphabet, config), len(s)


# ---------------------------------------------------------------------------
# Adversarial oracle
# ---------------------------------------------------------------------------


def adversarial_pairs(
    alphabet: Alphabet,
    length: int,
    samples: int,
    seed: int = 0,
) -> Iterator[tuple[str, str]]:
    """Yield near-tie pairs ``(B, C)`` with ``B <lex C`` for every position.

    ``B = p + sym(r) + sym(zeta) * pad`` reaches ``length`` symbols and
    ``C = p + sym(r + 1)``, so the maximal tail behind ``B`` pushes its key
    as close to ``C``'s as the alphabet allows.
    """
    if alphabet.size < 2:
        raise ConfigurationError("Near-tie pairs need at least two symbols.")
    if length < 1:
        raise ConfigurationError(f"Pair length must be at least 1, got {length}.")

    rng = random.Random(seed)
    symbols = alphabet.symbols
    top = symbols[-1]
    for position in range(length):
        pad = top * (length - position - 1)
        for r in range(alphabet.size - 1):
            for _ in range(samples):
                prefix = "".join(rng.choices(symbols, k=position))
                yield prefix + symbols[r] + pad, prefix + symbols[r + 1]


def adversarial_violations(
    alphabet: Alphabet,
    config: RadixConfig,
    length: int,
    samples: int,
    seed: int = 0,
) -> ProbeResult:
    """Count near-tie pairs of ``length`` symbols whose keys are misordered."""
    pairs = violations = 0
    for b, c in adversarial_pairs(alphabet, length, samples, seed):
        pairs += 1
        if not cantor_key(b, alphabet, config) < cantor_key(c, alphabet, config):
            violations += 1
    if violations:
        logger.warning("Adversarial probe at length %d: %d violations", length, violations)
    return ProbeResult(length=length, pairs=pairs, violations=violations)


def precision_report(
    alphabet: Alphabet,
    config: RadixConfig,
    probe_samples: int = 0,
    seed: int = 0,
) -> PrecisionReport:
    """Describe the precision budget, optionally probing lengths k and k + 1."""
    k = config.max_chunk_len
    probes = []
    if probe_samples > 0 and alphabet.size > 1:
        probes = [
            adversarial_violations(alphabet, config, length, probe_samples, seed)
            for length in (k, k + 1)
        ]
    return PrecisionReport(
        alphabet_size=alphabet.size,
        zeta=alphabet.zeta,
        epsilon=config.epsilon,
        x=config.x,
        mantissa_bits=config.mantissa_bits,
        max_chunk_len=k,
        error_bound=config.error_bound,
        near_tie_threshold=config.near_tie_threshold,
        min_gaps=[GapEntry(position=p, min_gap=config.min_gap(p)) for p in range(k)],
        probes=probes,
    )
