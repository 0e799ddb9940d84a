"""Tests for input validation and error types."""

import pytest

from cantor_sort.validation import (
    ConfigurationError,
    EncodingError,
    MonotonicityError,
    validate_chunk_len,
    validate_epsilon,
    validate_mantissa_bits,
)


class TestValidateEpsilon:
    """Tests for validate_epsilon function."""

    def test_valid(self):
        for epsilon in (2, 4, 100):
            validate_epsilon(epsilon, 26)  # Should not raise

    @pytest.mark.parametrize("epsilon", [1, 0, -3])
    def test_too_small(self, epsilon):
        with pytest.raises(MonotonicityError, match="epsilon >= 2"):
            validate_epsilon(epsilon, 26)

    @pytest.mark.parametrize("epsilon", [2.5, "4", True, None])
    def test_not_an_integer(self, epsilon):
        with pytest.raises(ConfigurationError, match="integer"):
            validate_epsilon(epsilon, 26)


class TestValidateChunkLen:
    """Tests for validate_chunk_len function."""

    def test_bounds_inclusive(self):
        validate_chunk_len(1, 8)
        validate_chunk_len(8, 8)

    @pytest.mark.parametrize("chunk_len", [0, 9])
    def test_out_of_range(self, chunk_len):
        with pytest.raises(ConfigurationError, match="1..8"):
            validate_chunk_len(chunk_len, 8)

    def test_not_an_integer(self):
        with pytest.raises(ConfigurationError):
            validate_chunk_len(2.0, 8)


class TestValidateMantissaBits:
    """Tests for validate_mantissa_bits function."""

    def test_int(self):
        assert validate_mantissa_bits(53) == 53

    def test_integral_float(self):
        assert validate_mantissa_bits(24.0) == 24

    @pytest.mark.parametrize("bits", [float("inf"), float("nan"), 10.5, False, 1, "53"])
    def test_rejected(self, bits):
        with pytest.raises(ConfigurationError):
            validate_mantissa_bits(bits)


class TestEncodingError:
    """Tests for EncodingError."""

    def test_message_without_index(self):
        e = EncodingError("!", 3)
        assert str(e) == "Symbol '!' at position 3 is not in the alphabet."
        assert e.index is None

    def test_with_index(self):
        e = EncodingError("!", 3).with_index(7)
        assert e.index == 7
        assert e.position == 3
        assert "string 7" in str(e)

    def test_is_value_error(self):
        assert issubclass(EncodingError, ValueError)
        assert issubclass(MonotonicityError, ConfigurationError)
