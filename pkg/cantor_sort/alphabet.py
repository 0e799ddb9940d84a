"""Symbol ordering, radix selection and the floating-point precision budget.

An alphabet assigns every symbol a 1-based rank in declaration order. The
radix ``x = |T| + epsilon`` must satisfy ``x > zeta + 1`` so that a single
rank step at position ``l`` outweighs any tail of maximal symbols after it.
The precision budget is the longest string length whose keys stay separated
by more than the accumulated rounding error of 64-bit floats.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType

from .config import (
    DEFAULT_SYMBOLS,
    MANTISSA_BITS,
    PAIR_ERROR_MARGIN,
    SAFETY_CONSTANT,
    logger,
)
from .validation import (
    ConfigurationError,
    EncodingError,
    MonotonicityError,
    validate_epsilon,
    validate_mantissa_bits,
)


@dataclass(frozen=True)
class Alphabet:
    """Ordered symbol set with ranks ``1..size`` in declaration order."""

    symbols: tuple[str, ...]
    rank: Mapping[str, int] = field(repr=False, compare=False)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def zeta(self) -> int:
        """Largest rank, i.e. the rank of the last symbol."""
        return len(self.symbols)

    def rank_of(self, symbol: str, position: int = 0) -> int:
        try:
            return self.rank[symbol]
        except KeyError:
            raise EncodingError(symbol, position) from None

    def encode(self, s: str) -> list[int]:
        """Return the rank of every symbol of ``s``."""
        rank = self.rank
        try:
            return [rank[c] for c in s]
        except KeyError:
            position = next(i for i, c in enumerate(s) if c not in rank)
            raise EncodingError(s[position], position) from None

    def translate(self, s: str) -> str:
        """Rank-code ``s`` so native string order equals alphabet order."""
        return "".join(map(chr, self.encode(s)))

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.rank


def build_alphabet(symbols: Iterable[str]) -> Alphabet:
    """Build an alphabet from an ordered sequence of distinct symbols.

    Raises:
        ConfigurationError: If the sequence is empty, repeats a symbol, or
            contains something other than a single code point.
    """
    ordered = tuple(symbols)
    if not ordered:
        raise ConfigurationError("An alphabet needs at least one symbol.")

    rank: dict[str, int] = {}
    for position, symbol in enumerate(ordered):
        if not isinstance(symbol, str) or len(symbol) != 1:
            raise ConfigurationError(
                f"Symbol {symbol!r} at position {position} is not a single code point."
            )
        if symbol in rank:
            raise ConfigurationError(f"Duplicate symbol {symbol!r} at position {position}.")
        rank[symbol] = position + 1

    return Alphabet(symbols=ordered, rank=MappingProxyType(rank))


def default_alphabet() -> Alphabet:
    """The lowercase a-z alphabet."""
    return build_alphabet(DEFAULT_SYMBOLS)


def load_alphabet(path: str | Path) -> Alphabet:
    """Read an alphabet file: one symbol per line, in sort order.

    Only the line terminator is removed, so a line holding a single space or
    tab declares that symbol. Empty lines are ignored. A line starting with
    ``#`` and longer than one character is a comment; a line that is exactly
    ``#`` declares the ``#`` symbol.
    """
    symbols: list[str] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.split("\n"), start=1):
        symbol = line.removesuffix("\r")
        if not symbol or (len(symbol) > 1 and symbol.startswith("#")):
            continue
        if len(symbol) != 1:
            raise ConfigurationError(
                f"{path}:{lineno}: expected exactly one symbol, got {symbol!r}."
            )
        symbols.append(symbol)

    alphabet = build_alphabet(symbols)
    logger.info("Loaded alphabet of %d symbols from %s", alphabet.size, path)
    return alphabet


# ---------------------------------------------------------------------------
# Gap and error bounds
# ---------------------------------------------------------------------------


def min_gap(x: int, zeta: int, position: int) -> float:
    """Smallest key separation of two strings first differing at ``position``.

    One rank step at ``position`` is worth ``x^-l``; the longest possible tail
    of maximal symbols behind the smaller string claws back at most
    ``zeta / (x - 1) * x^-l`` of it.
    """
    return (x - 1 - zeta) / (x - 1) * float(x) ** -position


def error_bound(x: int, zeta: int, mantissa_bits: int = MANTISSA_BITS) -> float:
    """Upper bound on the rounding error of one Horner-evaluated key.

    Each step rounds once on the division and once on the addition, and the
    earlier errors are divided by ``x`` again, so the total is a geometric
    sum that does not grow with string length.
    """
    return SAFETY_CONSTANT * 2.0 ** (1 - mantissa_bits) * zeta * x / (x - 1)


def _safe_chunk_len(x: int, zeta: int, mantissa_bits: int) -> int:
    threshold = PAIR_ERROR_MARGIN * error_bound(x, zeta, mantissa_bits)
    k = 1
    while min_gap(x, zeta, k) > threshold:
        k += 1
    return k


@dataclass(frozen=True)
class RadixConfig:
    """Radix ``x = |T| + epsilon`` and the precision budget it allows."""

    epsilon: int
    x: int
    zeta: int
    max_chunk_len: int
    mantissa_bits: int = MANTISSA_BITS

    def __post_init__(self) -> None:
        if self.x <= self.zeta + 1:
            raise MonotonicityError(
                f"x={self.x} must be strictly greater than zeta + 1 = {self.zeta + 1}."
            )
        if self.max_chunk_len < 1:
            raise ConfigurationError("max_chunk_len must be at least 1.")

    def min_gap(self, position: int) -> float:
        return min_gap(self.x, self.zeta, position)

    @property
    def error_bound(self) -> float:
        return error_bound(self.x, self.zeta, self.mantissa_bits)

    @property
    def near_tie_threshold(self) -> float:
        """Half the minimal gap at the last trusted position."""
        return self.min_gap(self.max_chunk_len - 1) / 2


def derive_radix(
    alphabet: Alphabet,
    epsilon: int,
    mantissa_bits: int = MANTISSA_BITS,
) -> RadixConfig:
    """Derive ``x = |T| + epsilon`` and the matching chunk budget.

    Raises:
        MonotonicityError: If ``epsilon < 2``.
        ConfigurationError: If ``mantissa_bits`` is not a finite integer >= 2.
    """
    validate_epsilon(epsilon, alphabet.zeta)
    bits = validate_mantissa_bits(mantissa_bits)
    x = alphabet.size + epsilon
    return RadixConfig(
        epsilon=epsilon,
        x=x,
        zeta=alphabet.zeta,
        max_chunk_len=_safe_chunk_len(x, alphabet.zeta, bits),
        mantissa_bits=bits,
    )


def max_safe_chunk_len(
    config: RadixConfig,
    alphabet: Alphabet,
    mantissa_bits: int | float = MANTISSA_BITS,
) -> int:
    """Largest ``k`` whose minimal gap at position ``k - 1`` clears the key error.

    The gap must exceed ``PAIR_ERROR_MARGIN`` times the single-key bound: both
    keys of a pair can be off by ``error_bound`` and what is left must still
    be above the near-tie threshold of half a gap.
    """
    bits = validate_mantissa_bits(mantissa_bits)
    if config.x <= alphabet.zeta + 1:
        raise MonotonicityError(
            f"x={config.x} must be strictly greater than zeta + 1 = {alphabet.zeta + 1}."
        )
    return _safe_chunk_len(config.x, alphabet.zeta, bits)
