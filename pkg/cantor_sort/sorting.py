"""String sorting by Cantor keys, with the direct comparison sort as oracle.

Every sorter runs in two phases: encode each string once, then run Python's
stable merge sort over indices. Sorting indices rather than strings keeps the
output a permutation and makes duplicates keep their input order.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, replace
from functools import cmp_to_key
from typing import TypeVar

from .alphabet import Alphabet, RadixConfig, default_alphabet, derive_radix
from .config import DEFAULT_EPSILON, MANTISSA_BITS, logger
from .keying import (
    CantorKey,
    ChunkedKey,
    PrefixTable,
    build_prefix_table,
    cached_key,
    cantor_key,
    chunked_key,
    compare_chunked,
)
from .models import Ordering
from .utils import ComparisonCounter
from .validation import (
    ConfigurationError,
    EncodingError,
    UsageError,
    VerificationError,
    validate_chunk_len,
)

K = TypeVar("K")


@dataclass(frozen=True)
class SortConfig:
    """Alphabet, radix and chunk length shared by one sorting run."""

    alphabet: Alphabet
    radix: RadixConfig
    chunk_len: int
    count_comparisons: bool = True

    def __post_init__(self) -> None:
        validate_chunk_len(self.chunk_len, self.radix.max_chunk_len)


def make_sort_config(
    alphabet: Alphabet | None = None,
    epsilon: int = DEFAULT_EPSILON,
    chunk_len: int | None = None,
    mantissa_bits: int = MANTISSA_BITS,
    count_comparisons: bool = True,
) -> SortConfig:
    """Build a ``SortConfig``; the chunk length defaults to the precision budget."""
    alphabet = alphabet or default_alphabet()
    radix = derive_radix(alphabet, epsilon, mantissa_bits)
    return SortConfig(
        alphabet=alphabet,
        radix=radix,
        chunk_len=radix.max_chunk_len if chunk_len is None else chunk_len,
        count_comparisons=count_comparisons,
    )


@dataclass(frozen=True)
class SortOutcome:
    """Result of one sort.

    Attributes:
        permutation: Input indices in sorted order.
        comparisons: Comparator calls in the sort phase.
        preprocess_symbols: Symbols encoded before sorting.
        element_comparisons: Chunk values or characters inspected while comparing.
        fallbacks: Near-tie comparisons decided by comparing strings directly.
        key_count: Auxiliary key values held during the sort.
    """

    permutation: tuple[int, ...]
    comparisons: int = 0
    preprocess_symbols: int = 0
    element_comparisons: int = 0
    fallbacks: int = 0
    key_count: int = 0

    def apply(self, strings: Sequence[str]) -> list[str]:
        return [strings[i] for i in self.permutation]


def _encode_all(strings: Sequence[str], encode: Callable[[str], K]) -> list[K]:
    keys = []
    for index, s in enumerate(strings):
        try:
            keys.append(encode(s))
        except EncodingError as e:
            raise e.with_index(index) from None
    return keys


def _sort_indices(n: int, cmp: Callable[[int, int], int]) -> tuple[int, ...]:
    return tuple(sorted(range(n), key=cmp_to_key(cmp)))


def compare_strings(
    a: str,
    b: str,
    rank: Mapping[str, int],
    counter: ComparisonCounter | None = None,
) -> int:
    """Lexicographic three-way comparison under alphabet rank order."""
    inspected = 0
    result = 0
    for ca, cb in zip(a, b):
        inspected += 1
        if ca != cb:
            result = Ordering.LESS if rank[ca] < rank[cb] else Ordering.GREATER
            break
    else:
        if len(a) != len(b):
            result = Ordering.LESS if len(a) < len(b) else Ordering.GREATER
    if counter is not None:
        counter.calls += 1
        counter.elements += inspected
    return result


def near_tie_compare(
    key_a: CantorKey,
    key_b: CantorKey,
    tau: float,
    fallback: Callable[[], int],
    counter: ComparisonCounter | None = None,
) -> int:
    """Order by key unless the keys are within ``tau`` of each other.

    Keys that close may be rounding noise, so ``fallback`` decides instead.
    """
    if counter is not None:
        counter.calls += 1
    if abs(key_a - key_b) > tau:
        return Ordering.LESS if key_a < key_b else Ordering.GREATER
    if counter is not None:
        counter.fallbacks += 1
    return fallback()


# ---------------------------------------------------------------------------
# Sorters
# ---------------------------------------------------------------------------


def cantor_sort(strings: Sequence[str], config: SortConfig) -> SortOutcome:
    """Sort by chunked Cantor keys.

    Raises:
        EncodingError: With the index of the first unencodable string.
    """
    alphabet, radix, k = config.alphabet, config.radix, config.chunk_len
    keys: list[ChunkedKey] = _encode_all(
        strings, lambda s: chunked_key(s, alphabet, radix, k)
    )
    preprocess = sum(key.length for key in keys)
    key_count = sum(len(key.chunks) for key in keys)

    counter = ComparisonCounter()
    if config.count_comparisons:
        order = _sort_indices(len(keys), lambda i, j: compare_chunked(keys[i], keys[j], counter))
    else:
        # Tuples of floats compare exactly like compare_chunked.
        order = tuple(sorted(range(len(keys)), key=lambda i: keys[i].chunks))

    logger.info(
        "Cantor sort of %d strings (k=%d): %d key comparisons", len(keys), k, counter.calls
    )
    return SortOutcome(
        permutation=order,
        comparisons=counter.calls,
        preprocess_symbols=preprocess,
        element_comparisons=counter.elements,
        key_count=key_count,
    )


def splitwise_sort(strings: Sequence[str], k: int, config: SortConfig) -> SortOutcome:
    """Sort by chunked keys with an explicit chunk size ``k``.

    ``k = 1`` degenerates to comparing per-symbol ranks.
    """
    validate_chunk_len(k, config.radix.max_chunk_len)
    return cantor_sort(strings, replace(config, chunk_len=k))


def single_key_sort(strings: Sequence[str], config: SortConfig) -> SortOutcome:
    """Sort by one float key per string.

    Raises:
        UsageError: If any string is longer than the precision budget.
    """
    budget = config.radix.max_chunk_len
    for index, s in enumerate(strings):
        if len(s) > budget:
            raise UsageError(
                f"String {index} has {len(s)} symbols; a single key is exact only "
                f"up to {budget}. Use cantor_sort instead."
            )

    alphabet, radix = config.alphabet, config.radix
    keys = _encode_all(strings, lambda s: cantor_key(s, alphabet, radix))
    counter = ComparisonCounter()

    def cmp(i: int, j: int) -> int:
        counter.calls += 1
        counter.elements += 1
        return (keys[i] > keys[j]) - (keys[i] < keys[j])

    order = _sort_indices(len(keys), cmp)
    return SortOutcome(
        permutation=order,
        comparisons=counter.calls,
        preprocess_symbols=sum(len(s) for s in strings),
        element_comparisons=counter.elements,
        key_count=len(keys),
    )


def cached_key_sort(
    strings: Sequence[str],
    table: PrefixTable,
    config: SortConfig,
) -> SortOutcome:
    """Sort by prefix-cached single keys under the near-tie discipline.

    Keys within the near-tie threshold fall back to direct comparison, so the
    result matches ``baseline_sort`` for strings of any length.
    """
    alphabet, radix = config.alphabet, config.radix
    encoded = _encode_all(strings, lambda s: cached_key(s, table, alphabet, radix))
    keys = [key for key, _ in encoded]
    tau = radix.near_tie_threshold
    rank = alphabet.rank
    counter = ComparisonCounter()

    def cmp(i: int, j: int) -> int:
        return near_tie_compare(
            keys[i], keys[j], tau, lambda: compare_strings(strings[i], strings[j], rank), counter
        )

    order = _sort_indices(len(keys), cmp)
    logger.info(
        "Cached-key sort of %d strings: %d comparisons, %d fallbacks",
        len(keys),
        counter.calls,
        counter.fallbacks,
    )
    return SortOutcome(
        permutation=order,
        comparisons=counter.calls,
        preprocess_symbols=sum(count for _, count in encoded),
        element_comparisons=counter.calls,
        fallbacks=counter.fallbacks,
        key_count=len(keys),
    )


def baseline_sort(
    strings: Sequence[str],
    alphabet: Alphabet | None = None,
    count_comparisons: bool = True,
) -> SortOutcome:
    """Direct lexicographic comparison sort under alphabet rank order.

    Raises:
        EncodingError: If a string has a symbol outside the alphabet.
    """
    alphabet = alphabet or default_alphabet()
    if count_comparisons:
        _encode_all(strings, alphabet.encode)
        rank = alphabet.rank
        counter = ComparisonCounter()
        order = _sort_indices(
            len(strings), lambda i, j: compare_strings(strings[i], strings[j], rank, counter)
        )
    else:
        coded = _encode_all(strings, alphabet.translate)
        counter = ComparisonCounter()
        order = tuple(sorted(range(len(coded)), key=coded.__getitem__))

    logger.info(
        "Baseline sort of %d strings: %d comparisons, %d characters inspected",
        len(strings),
        counter.calls,
        counter.elements,
    )
    return SortOutcome(
        permutation=order,
        comparisons=counter.calls,
        element_comparisons=counter.elements,
    )


def verify_permutation(
    strings: Sequence[str],
    permutation: Sequence[int],
    alphabet: Alphabet | None = None,
) -> None:
    """Check that ``permutation`` is a bijection that sorts ``strings``.

    Raises:
        VerificationError: On a missing or repeated index, or an inversion.
    """
    alphabet = alphabet or default_alphabet()
    if sorted(permutation) != list(range(len(strings))):
        raise VerificationError("Result is not a permutation of the input indices.")
    rank = alphabet.rank
    for position in range(1, len(permutation)):
        prev, cur = strings[permutation[position - 1]], strings[permutation[position]]
        if compare_strings(prev, cur, rank) > 0:
            raise VerificationError(
                f"Inversion at position {position}: {prev!r} sorted before {cur!r}."
            )


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

SORT_ALGORITHMS = ("cantor", "splitwise", "baseline", "cached")


def half_prefix_table(strings: Sequence[str], config: SortConfig) -> PrefixTable:
    """Cache the first half of every string."""
    return build_prefix_table(
        {s[: len(s) // 2] for s in strings}, config.alphabet, config.radix
    )


def run_sort(strings: Sequence[str], algorithm: str, config: SortConfig) -> SortOutcome:
    """Sort with one of ``SORT_ALGORITHMS``.

    Raises:
        ConfigurationError: For an unknown algorithm name.
    """
    if algorithm == "cantor":
        return cantor_sort(strings, config)
    if algorithm == "splitwise":
        return splitwise_sort(strings, config.chunk_len, config)
    if algorithm == "baseline":
        return baseline_sort(strings, config.alphabet)
    if algorithm == "cached":
        return cached_key_sort(strings, half_prefix_table(strings, config), config)
    raise ConfigurationError(
        f"Unknown algorithm {algorithm!r}; expected one of {', '.join(SORT_ALGORITHMS)}."
    )


def verify_against_baseline(
    strings: Sequence[str],
    outcome: SortOutcome,
    config: SortConfig,
    algorithm: str = "cantor",
) -> None:
    """Raise ``VerificationError`` unless ``outcome`` matches the direct sort."""
    expected = baseline_sort(strings, config.alphabet, count_comparisons=False)
    if expected.permutation != outcome.permutation:
        raise VerificationError(f"{algorithm} sort disagrees with the direct comparison sort.")
