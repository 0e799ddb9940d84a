"""Cantor sort.

Lexicographic string sorting, suffix arrays and precision analysis built on
order-preserving floating-point keys. Ships a command-line tool and a
read-only MCP server.
"""

from .alphabet import (
    Alphabet,
    RadixConfig,
    build_alphabet,
    default_alphabet,
    derive_radix,
    load_alphabet,
    max_safe_chunk_len,
)
from .keying import (
    ChunkedKey,
    PrefixTable,
    build_prefix_table,
    cantor_key,
    chunked_key,
    compare_chunked,
    key_with_prefix_cache,
    precision_report,
)
from .sorting import (
    SortConfig,
    SortOutcome,
    baseline_sort,
    cached_key_sort,
    cantor_sort,
    make_sort_config,
    single_key_sort,
    splitwise_sort,
    verify_permutation,
)
from .suffix import SuffixArray, naive_suffix_array, suffix_array, suffix_keys
from .validation import (
    ConfigurationError,
    EncodingError,
    MonotonicityError,
    UsageError,
    VerificationError,
)

__all__ = [
    "Alphabet",
    "RadixConfig",
    "build_alphabet",
    "default_alphabet",
    "derive_radix",
    "load_alphabet",
    "max_safe_chunk_len",
    "ChunkedKey",
    "PrefixTable",
    "build_prefix_table",
    "cantor_key",
    "chunked_key",
    "compare_chunked",
    "key_with_prefix_cache",
    "precision_report",
    "SortConfig",
    "SortOutcome",
    "baseline_sort",
    "cached_key_sort",
    "cantor_sort",
    "make_sort_config",
    "single_key_sort",
    "splitwise_sort",
    "verify_permutation",
    "SuffixArray",
    "naive_suffix_array",
    "suffix_array",
    "suffix_keys",
    "ConfigurationError",
    "EncodingError",
    "MonotonicityError",
    "UsageError",
    "VerificationError",
]
__version__ = "0.1.0"
