"""Pytest configuration and shared fixtures."""

import random

import pytest

from cantor_sort.alphabet import build_alphabet, default_alphabet, derive_radix
from cantor_sort.sorting import make_sort_config


@pytest.fixture
def alphabet():
    """The default a-z alphabet."""
    return default_alphabet()


@pytest.fixture
def radix(alphabet):
    """Default radix: x = 30, k = 8."""
    return derive_radix(alphabet, 4)


@pytest.fixture
def sort_config(alphabet):
    """Default sort configuration."""
    return make_sort_config(alphabet, 4)


@pytest.fixture
def abc():
    """Three-symbol alphabet used for exhaustive checks."""
    return build_alphabet("abc")


@pytest.fixture
def abc_radix(abc):
    """x = 5 over {a, b, c}."""
    return derive_radix(abc, 2)


@pytest.fixture
def random_words():
    """Factory for reproducible random a-z corpora."""

    def make(n: int, len_min: int = 0, len_max: int = 64, seed: int = 7) -> list[str]:
        rng = random.Random(seed)
        letters = "abcdefghijklmnopqrstuvwxyz"
        return [
            "".join(rng.choices(letters, k=rng.randint(len_min, len_max))) for _ in range(n)
        ]

    return make


@pytest.fixture
def alphabet_file(tmp_path):
    """Alphabet file listing b before a, with a comment and a blank line."""
    path = tmp_path / "alphabet.txt"
    path.write_text("# reversed pair\nb\n\na\nc\n", encoding="utf-8")
    return path
