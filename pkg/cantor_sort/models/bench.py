"""Benchmark corpus specification and report models."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, model_validator


class CorpusKind(str, Enum):
    """Shape of a generated or ingested corpus."""

    RANDOM_UNIFORM = "random-uniform"
    SHARED_PREFIX = "shared-prefix"
    DICTIONARY_FILE = "dictionary-file"
    ALL_EQUAL = "all-equal"
    NEAR_TIE_ADVERSARIAL = "near-tie-adversarial"


class CorpusSpec(BaseModel):
    """Reproducible description of a benchmark corpus.

    For ``shared-prefix`` corpora ``prefix_len`` is the length of the common
    prefix; for ``near-tie-adversarial`` corpora it is the position at which
    the two strings of each pair differ (normally ``k - 1``).
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: CorpusKind = CorpusKind.RANDOM_UNIFORM
    n: NonNegativeInt = 1000
    len_min: NonNegativeInt = 0
    len_max: NonNegativeInt = 64
    prefix_len: NonNegativeInt = 0
    seed: int = 0
    path: str | None = None

    @model_validator(mode="after")
    def _check_bounds(self) -> CorpusSpec:
        if self.len_min > self.len_max:
            raise ValueError(f"len_min ({self.len_min}) exceeds len_max ({self.len_max})")
        if self.kind == CorpusKind.SHARED_PREFIX and self.prefix_len > self.len_max:
            raise ValueError(
                f"prefix_len ({self.prefix_len}) exceeds len_max ({self.len_max})"
            )
        if self.kind == CorpusKind.DICTIONARY_FILE and not self.path:
            raise ValueError("dictionary-file corpora need a path")
        return self


class AlgorithmRecord(BaseModel):
    """Measurements of one algorithm over one corpus."""

    algorithm: str
    n: NonNegativeInt
    wall_time_s: float = Field(ge=0.0)
    comparisons: NonNegativeInt
    element_comparisons: NonNegativeInt
    preprocess_symbols: NonNegativeInt
    peak_key_count: NonNegativeInt
    max_chunks_per_string: NonNegativeInt
    fallbacks: NonNegativeInt = 0


class BenchReport(BaseModel):
    """All algorithm records for one corpus instance."""

    corpus: CorpusSpec | None = None
    n: NonNegativeInt
    total_symbols: NonNegativeInt
    chunk_len: int
    x: int
    records: list[AlgorithmRecord] = Field(default_factory=list)
    environment: str = ""

    def record(self, algorithm: str) -> AlgorithmRecord:
        for entry in self.records:
            if entry.algorithm == algorithm:
                return entry
        raise KeyError(algorithm)
