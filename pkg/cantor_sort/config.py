"""Configuration and constants for the Cantor sorting toolkit."""

from __future__ import annotations

import logging
import os
import sys

# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------

logger = logging.getLogger("cantor_sort")
logging.basicConfig(
    level=os.getenv("CANTOR_LOG_LEVEL", "INFO").upper(),
    stream=sys.stderr,
)


def _int_env(name: str, default: int) -> int:
    """Read an integer environment variable, falling back to the default."""
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default


# ---------------------------------------------------------------------------
# Configuration from environment variables
# ---------------------------------------------------------------------------

EPSILON = _int_env("CANTOR_EPSILON", 4)
ALPHABET_FILE = os.getenv("CANTOR_ALPHABET_FILE", "")  # empty = a-z
MANTISSA_BITS = _int_env("CANTOR_MANTISSA_BITS", 53)
MAX_STRINGS = _int_env("CANTOR_MAX_STRINGS", 100_000)

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------

DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"
DEFAULT_EPSILON = 4
MIN_EPSILON = 2

# Multiplier on the accumulated Horner rounding error (in units of 2^(1-p)).
SAFETY_CONSTANT = 8

# A gap must survive the error of both keys and stay above half of itself.
PAIR_ERROR_MARGIN = 4

# Allowed drift between prefix-cached and direct keys.
PREFIX_CACHE_ULPS = 4

DEFAULT_BENCH_SEED = 0
