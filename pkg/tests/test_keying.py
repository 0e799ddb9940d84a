"""Tests for Cantor keys, chunked keys and the prefix cache."""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cantor_sort.alphabet import build_alphabet, default_alphabet, derive_radix
from cantor_sort.keying import (
    adversarial_pairs,
    adversarial_violations,
    build_prefix_table,
    cached_key,
    cantor_key,
    chunked_key,
    compare_chunked,
    exact_key,
    key_with_prefix_cache,
    max_key,
    precision_report,
    within_ulps,
)
from cantor_sort.models import Ordering
from cantor_sort.utils import ComparisonCounter
from cantor_sort.validation import ConfigurationError, EncodingError, UsageError

LETTERS = "abcdefghijklmnopqrstuvwxyz"
_DEFAULT = default_alphabet()
_RADIX = derive_radix(_DEFAULT, 4)

words = st.text(alphabet=LETTERS, max_size=40)


def _all_strings(symbols: str, max_len: int) -> list[str]:
    return [
        "".join(chars)
        for length in range(max_len + 1)
        for chars in itertools.product(symbols, repeat=length)
    ]


class TestCantorKey:
    """Tests for cantor_key."""

    def test_empty_string(self, alphabet, radix):
        assert cantor_key("", alphabet, radix) == 0.0

    def test_single_symbol(self, alphabet, radix):
        assert cantor_key("a", alphabet, radix) == 1.0

    def test_two_symbols(self, alphabet, radix):
        assert cantor_key("ab", alphabet, radix) == pytest.approx(1 + 2 / 30)
        assert cantor_key("ba", alphabet, radix) == pytest.approx(2 + 1 / 30)

    def test_matches_exact_sum(self, alphabet, radix):
        """Horner evaluation agrees with the exact series to within rounding."""
        for s in ["ab", "zzzz", "hello", "abcdefgh"]:
            assert cantor_key(s, alphabet, radix) == pytest.approx(
                float(exact_key(s, alphabet, radix)), rel=1e-15
            )

    def test_unknown_symbol(self, alphabet, radix):
        with pytest.raises(EncodingError, match="position 1"):
            cantor_key("a1", alphabet, radix)

    def test_bit_reproducible(self, alphabet, radix):
        assert cantor_key("abcabc", alphabet, radix) == cantor_key("abcabc", alphabet, radix)

    @given(words)
    def test_key_bound(self, s):
        assert cantor_key(s, _DEFAULT, _RADIX) <= max_key(_RADIX)

    @given(
        st.text(alphabet=LETTERS, max_size=4), st.text(alphabet=LETTERS, min_size=1, max_size=4)
    )
    def test_extension_increases_key(self, s, t):
        """Appending symbols raises the key."""
        assert cantor_key(s + t, _DEFAULT, _RADIX) > cantor_key(s, _DEFAULT, _RADIX)


class TestMonotonicity:
    """Order preservation within the precision budget."""

    def test_exhaustive_three_symbols(self, abc, abc_radix):
        """Every string over {a, b, c} up to length 6 keys in lexicographic order."""
        strings = sorted(_all_strings("abc", 6))
        keys = [cantor_key(s, abc, abc_radix) for s in strings]
        assert len(strings) == 1093
        assert all(a < b for a, b in itertools.pairwise(keys))
        assert len(set(keys)) == len(keys)

    def test_exhaustive_two_symbols(self):
        """x = 4 over {a, b}: strictly increasing keys along lexicographic order."""
        ab = build_alphabet("ab")
        config = derive_radix(ab, 2)
        strings = sorted(_all_strings("ab", 12))
        keys = [cantor_key(s, ab, config) for s in strings]
        assert all(a < b for a, b in itertools.pairwise(keys))

    def test_two_symbol_adversarial_at_budget(self):
        ab = build_alphabet("ab")
        config = derive_radix(ab, 2)
        result = adversarial_violations(ab, config, config.max_chunk_len, samples=50)
        assert result.violations == 0

    def test_adversarial_default_config_quick(self, alphabet, radix):
        result = adversarial_violations(alphabet, radix, 8, samples=20, seed=3)
        assert result.pairs == 8 * 25 * 20
        assert result.violations == 0

    @pytest.mark.slow
    def test_adversarial_default_config_full(self, alphabet, radix):
        """1,000 random prefixes per position and adjacent rank pair."""
        result = adversarial_violations(alphabet, radix, 8, samples=1000)
        assert result.pairs == 200_000
        assert result.violations == 0

    def test_adversarial_pairs_shape(self, alphabet):
        pairs = list(adversarial_pairs(alphabet, 8, samples=1))
        assert len(pairs) == 8 * 25
        for b, c in pairs:
            assert len(b) == 8
            assert b < c
            position = len(c) - 1
            assert b[:position] == c[:position]
            assert alphabet.rank[c[position]] - alphabet.rank[b[position]] == 1
            assert set(b[position + 1 :]) <= {"z"}

    def test_adversarial_pairs_need_two_symbols(self):
        with pytest.raises(ConfigurationError):
            list(adversarial_pairs(build_alphabet("a"), 4, samples=1))


class TestChunkedKey:
    """Tests for chunked_key and compare_chunked."""

    def test_short_string_single_chunk(self, alphabet, radix):
        key = chunked_key("abc", alphabet, radix, 8)
        assert key.chunks == (cantor_key("abc", alphabet, radix),)

    def test_split(self, alphabet, radix):
        key = chunked_key("aaaaaaaab", alphabet, radix, 8)
        assert key.chunks == (
            cantor_key("aaaaaaaa", alphabet, radix),
            cantor_key("b", alphabet, radix),
        )
        assert key.length == 9

    def test_empty(self, alphabet, radix):
        assert chunked_key("", alphabet, radix).chunks == ()

    def test_default_chunk_len(self, alphabet, radix):
        assert chunked_key("abc", alphabet, radix).chunk_len == 8

    @pytest.mark.parametrize("k", [0, 9, -1])
    def test_chunk_len_out_of_range(self, alphabet, radix, k):
        with pytest.raises(ConfigurationError, match="safe range"):
            chunked_key("abc", alphabet, radix, k)

    def test_compare_examples(self, alphabet, radix):
        def key(s):
            return chunked_key(s, alphabet, radix)

        assert compare_chunked(key("aa"), key("ab")) == Ordering.LESS
        assert compare_chunked(key("abc"), key("abc")) == Ordering.EQUAL
        assert compare_chunked(key("a" * 8), key("a" * 9)) == Ordering.LESS
        assert compare_chunked(key("b"), key("a" * 20)) == Ordering.GREATER

    def test_mismatched_chunk_len(self, alphabet, radix):
        with pytest.raises(UsageError):
            compare_chunked(
                chunked_key("ab", alphabet, radix, 4), chunked_key("ab", alphabet, radix, 8)
            )

    def test_counter(self, alphabet, radix):
        counter = ComparisonCounter()
        a = chunked_key("a" * 16 + "b", alphabet, radix)
        b = chunked_key("a" * 16 + "c", alphabet, radix)
        compare_chunked(a, b, counter)
        assert counter.calls == 1
        assert counter.elements == 3

    @settings(max_examples=300)
    @given(words, words, st.integers(min_value=1, max_value=8))
    def test_chunked_order_matches_strings(self, a, b, k):
        """Chunked comparison agrees with string order at any length."""
        got = compare_chunked(
            chunked_key(a, _DEFAULT, _RADIX, k), chunked_key(b, _DEFAULT, _RADIX, k)
        )
        assert got == (a > b) - (a < b)


class TestPrefixCache:
    """Tests for build_prefix_table and key_with_prefix_cache."""

    def test_empty_table(self, alphabet, radix):
        table = build_prefix_table([], alphabet, radix)
        assert len(table) == 0
        assert key_with_prefix_cache("ab", table, alphabet, radix) == cantor_key(
            "ab", alphabet, radix
        )

    def test_singleton_table(self, alphabet, radix):
        table = build_prefix_table(["a"], alphabet, radix)
        assert table.entries["a"] == (1.0, 1)
        assert key_with_prefix_cache("ab", table, alphabet, radix) == pytest.approx(1 + 2 / 30)

    def test_entries_match_direct_keys(self, alphabet, radix):
        table = build_prefix_table({"th", "the"}, alphabet, radix)
        assert "th" in table and "the" in table
        assert table.entries["the"].key == cantor_key("the", alphabet, radix)
        assert table.entries["th"].key == cantor_key("th", alphabet, radix)
        assert table.max_prefix_len == 3

    def test_longest_match(self, alphabet, radix):
        table = build_prefix_table({"th", "the"}, alphabet, radix)
        key, encoded = cached_key("there", table, alphabet, radix)
        assert encoded == 2
        assert within_ulps(key, cantor_key("there", alphabet, radix))

    def test_repeated_prefix(self, alphabet, radix):
        table = build_prefix_table(["ab"], alphabet, radix)
        got = key_with_prefix_cache("abab", table, alphabet, radix)
        expected = cantor_key("ab", alphabet, radix) * (1 + 1 / 900)
        assert got == pytest.approx(expected)
        assert within_ulps(got, cantor_key("abab", alphabet, radix))

    def test_encoding_error_in_remainder(self, alphabet, radix):
        table = build_prefix_table(["ab"], alphabet, radix)
        with pytest.raises(EncodingError) as exc_info:
            key_with_prefix_cache("abx!", table, alphabet, radix)
        assert exc_info.value.position == 3

    @settings(max_examples=300)
    @given(words, st.integers(min_value=0, max_value=40))
    def test_within_four_ulps(self, s, cut):
        table = build_prefix_table([s[:cut]], _DEFAULT, _RADIX)
        got = key_with_prefix_cache(s, table, _DEFAULT, _RADIX)
        assert within_ulps(got, cantor_key(s, _DEFAULT, _RADIX), 4)


class TestWithinUlps:
    def test_identical(self):
        assert within_ulps(1.0, 1.0)

    def test_adjacent(self):
        assert within_ulps(math.nextafter(1.0, 2.0), 1.0, 1)

    def test_far(self):
        assert not within_ulps(1.0, 1.0 + 1e-9)


class TestPrecisionReport:
    """Tests for precision_report."""

    def test_default_report(self, alphabet, radix):
        report = precision_report(alphabet, radix)
        assert report.x == 30
        assert report.max_chunk_len == 8
        assert [gap.position for gap in report.min_gaps] == list(range(8))
        assert report.min_gaps[0].min_gap == pytest.approx(1.034483e-01, rel=1e-6)
        assert report.probes == []

    def test_probes_at_budget_and_one_past(self, alphabet, radix):
        report = precision_report(alphabet, radix, probe_samples=2, seed=1)
        assert [probe.length for probe in report.probes] == [8, 9]
        assert report.probes[0].violations == 0
