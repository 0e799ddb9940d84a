"""Error types and input validation for keys, radices and chunk lengths."""

from __future__ import annotations

import math

from .config import MIN_EPSILON


class ConfigurationError(ValueError):
    """An alphabet, radix, chunk length or corpus setting is invalid."""


class MonotonicityError(ConfigurationError):
    """The radix is too small for keys to preserve lexicographic order."""


class UsageError(ValueError):
    """An operation was called with operands it cannot combine."""


class VerificationError(RuntimeError):
    """Two orderings that must agree do not."""


class EncodingError(ValueError):
    """A symbol outside the alphabet was found while encoding a string.

    Attributes:
        symbol: The offending symbol.
        position: Offset of the symbol inside its string.
        index: Offset of the string inside its corpus, when known.
    """

    def __init__(self, symbol: str, position: int, index: int | None = None) -> None:
        self.symbol = symbol
        self.position = position
        self.index = index
        where = f"position {position}"
        if index is not None:
            where = f"string {index}, {where}"
        super().__init__(f"Symbol {symbol!r} at {where} is not in the alphabet.")

    def with_index(self, index: int) -> EncodingError:
        """Return a copy that also names the string's corpus index."""
        return EncodingError(self.symbol, self.position, index)


def validate_epsilon(epsilon: int, zeta: int) -> None:
    """Raise unless ``epsilon`` keeps the radix strictly above ``zeta + 1``.

    With 1-based ranks the largest rank is the alphabet size, so the
    monotonicity bound ``x > zeta / (C[l] - B[l]) + 1`` maximizes to
    ``x > zeta + 1`` for adjacent ranks, which needs ``epsilon >= 2``.
    """
    if isinstance(epsilon, bool) or not isinstance(epsilon, int):
        raise ConfigurationError(f"epsilon must be an integer, got {epsilon!r}.")
    if epsilon < MIN_EPSILON:
        raise MonotonicityError(
            f"epsilon={epsilon} gives x={zeta + epsilon}, but monotonicity requires "
            f"x > zeta + 1 = {zeta + 1} (epsilon >= {MIN_EPSILON})."
        )


def validate_chunk_len(chunk_len: int, max_chunk_len: int) -> None:
    """Raise unless ``1 <= chunk_len <= max_chunk_len``."""
    if isinstance(chunk_len, bool) or not isinstance(chunk_len, int):
        raise ConfigurationError(f"chunk length must be an integer, got {chunk_len!r}.")
    if not 1 <= chunk_len <= max_chunk_len:
        raise ConfigurationError(
            f"chunk length {chunk_len} is outside the safe range 1..{max_chunk_len}."
        )


def validate_mantissa_bits(mantissa_bits: int | float) -> int:
    """Return ``mantissa_bits`` as an int, rejecting non-finite or tiny widths."""
    if isinstance(mantissa_bits, bool):
        raise ConfigurationError("mantissa width must be an integer.")
    if isinstance(mantissa_bits, float):
        if not math.isfinite(mantissa_bits) or not mantissa_bits.is_integer():
            raise ConfigurationError(
                f"mantissa width must be a finite integer, got {mantissa_bits!r}."
            )
        mantissa_bits = int(mantissa_bits)
    if not isinstance(mantissa_bits, int):
        raise ConfigurationError(f"mantissa width must be an integer, got {mantissa_bits!r}.")
    if mantissa_bits < 2:
        raise ConfigurationError(f"mantissa width must be at least 2, got {mantissa_bits}.")
    return mantissa_bits
