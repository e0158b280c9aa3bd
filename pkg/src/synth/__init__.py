"""Deterministic synthetic signature generator."""

from src.synth.writer import PressureProfile, SinusoidBank, WriterParams, make_writer
from src.synth.samples import NO_JITTER, Jitter, genuine_sample, skilled_forgery, speed_correlation, time_warp
from src.synth.dataset import (
    SyntheticWriter,
    generate_writer,
    generate_writers,
    make_dataset,
    split_writers,
    write_dataset,
)

__all__ = [
    "PressureProfile",
    "SinusoidBank",
    "WriterParams",
    "make_writer",
    "NO_JITTER",
    "Jitter",
    "genuine_sample",
    "skilled_forgery",
    "speed_correlation",
    "time_warp",
    "SyntheticWriter",
    "generate_writer",
    "generate_writers",
    "make_dataset",
    "split_writers",
    "write_dataset",
]
