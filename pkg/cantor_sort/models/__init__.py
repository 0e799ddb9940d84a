"""Pydantic models and shared enums."""

from .base import Ordering, OutputFormat
from .bench import AlgorithmRecord, BenchReport, CorpusKind, CorpusSpec
from .precision import GapEntry, PrecisionReport, ProbeResult

__all__ = [
    "AlgorithmRecord",
    "BenchReport",
    "CorpusKind",
    "CorpusSpec",
    "GapEntry",
    "Ordering",
    "OutputFormat",
    "PrecisionReport",
    "ProbeResult",
]
