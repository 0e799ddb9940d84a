"""Suffix arrays from one-pass suffix keys.

All suffix keys come from a single right-to-left pass that shares the
Horner accumulator: the key of ``s[j:]`` is the key of ``s[j + 1:]``
divided by ``x`` plus the rank of ``s[j]``. Suffixes sharing a prefix longer
than the precision budget get keys that differ only by rounding noise, so
any pair closer than the near-tie threshold is compared directly.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cmp_to_key

from .alphabet import Alphabet, RadixConfig
from .config import logger
from .keying import CantorKey
from .sorting import near_tie_compare
from .utils import ComparisonCounter
from .validation import VerificationError


@dataclass(frozen=True)
class SuffixKeys:
    """``keys[j]`` is the key of the suffix starting at ``j``."""

    keys: tuple[CantorKey, ...]
    source_len: int
    steps: int


@dataclass(frozen=True)
class SuffixArray:
    """Suffix start indices in lexicographic order of their suffixes."""

    order: tuple[int, ...]
    fallback_count: int = 0
    comparisons: int = 0


def suffix_keys_raw(s: str, alphabet: Alphabet, config: RadixConfig) -> list[CantorKey]:
    """Suffix keys in scan order: entry ``i`` keys the suffix at ``len(s) - 1 - i``."""
    ranks = alphabet.encode(s)
    x = float(config.x)
    raw: list[CantorKey] = []
    current = 0.0
    for r in reversed(ranks):
        current = current / x + r
        raw.append(current)
    return raw


def suffix_keys(s: str, alphabet: Alphabet, config: RadixConfig) -> SuffixKeys:
    """Key every suffix of ``s`` with exactly ``len(s)`` divide-add steps.

    ``keys[j]`` is bit-identical to ``cantor_key(s[j:])``.
    """
    raw = suffix_keys_raw(s, alphabet, config)
    return SuffixKeys(keys=tuple(reversed(raw)), source_len=len(s), steps=len(raw))


def suffix_array(s: str, alphabet: Alphabet, config: RadixConfig) -> SuffixArray:
    """Sort suffix start indices by suffix key, comparing near ties directly.

    A shorter suffix that is a prefix of a longer one sorts first.
    """
    keys = suffix_keys(s, alphabet, config).keys
    coded = alphabet.translate(s)
    tau = config.near_tie_threshold
    counter = ComparisonCounter()

    def direct(i: int, j: int) -> int:
        a, b = coded[i:], coded[j:]
        return (a > b) - (a < b)

    def cmp(i: int, j: int) -> int:
        return near_tie_compare(keys[i], keys[j], tau, lambda: direct(i, j), counter)

    order = tuple(sorted(range(len(keys)), key=cmp_to_key(cmp)))
    logger.info(
        "Suffix array of %d symbols: %d comparisons, %d near-tie fallbacks",
        len(s),
        counter.calls,
        counter.fallbacks,
    )
    return SuffixArray(order=order, fallback_count=counter.fallbacks, comparisons=counter.calls)


def naive_suffix_array(s: str, alphabet: Alphabet) -> SuffixArray:
    """Sort suffixes by direct comparison under alphabet rank order."""
    coded = alphabet.translate(s)
    order = tuple(sorted(range(len(coded)), key=lambda j: coded[j:]))
    return SuffixArray(order=order)


def verify_suffix_array(s: str, order: Sequence[int], alphabet: Alphabet) -> None:
    """Check that ``order`` is a permutation listing suffixes in order.

    Raises:
        VerificationError: On a missing index or an adjacent inversion.
    """
    if sorted(order) != list(range(len(s))):
        raise VerificationError("Suffix order is not a permutation of the start indices.")
    coded = alphabet.translate(s)
    for position in range(1, len(order)):
        if coded[order[position - 1] :] > coded[order[position] :]:
            raise VerificationError(
                f"Suffix {order[position - 1]} sorted before smaller suffix {order[position]}."
            )


def verify_against_naive(s: str, result: SuffixArray, alphabet: Alphabet) -> None:
    """Raise ``VerificationError`` unless ``result`` matches the naive oracle."""
    if naive_suffix_array(s, alphabet).order != result.order:
        raise VerificationError("Suffix array disagrees with direct suffix comparison.")
