"""Precision budget report models."""

from __future__ import annotations

from pydantic import BaseModel, Field, NonNegativeInt, PositiveInt


class GapEntry(BaseModel):
    """Minimal key separation at one string position."""

    position: NonNegativeInt
    min_gap: float


class ProbeResult(BaseModel):
    """Outcome of the adversarial near-tie oracle at one string length."""

    length: PositiveInt
    pairs: NonNegativeInt
    violations: NonNegativeInt


class PrecisionReport(BaseModel):
    """Everything that determines how long a single key stays exact."""

    alphabet_size: PositiveInt
    zeta: PositiveInt
    epsilon: int
    x: int
    mantissa_bits: int
    max_chunk_len: PositiveInt
    error_bound: float
    near_tie_threshold: float
    min_gaps: list[GapEntry] = Field(default_factory=list)
    probes: list[ProbeResult] = Field(default_factory=list)
