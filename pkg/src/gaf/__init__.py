"""Gramian angular field encoding."""

from src.gaf.models import STACK_CHANNELS, GafMatrix, GafStack
from src.gaf.fields import count_entries, gadf, gasf, phase_encode
from src.gaf.construction import (
    asymmetric_gaf,
    encode_signature,
    encode_six_channel,
    symmetric_gaf,
)
from src.gaf.trajectory import rasterize_trajectory
from src.gaf.storage import decode_gaf6, encode_gaf6, read_gaf6, write_gaf6, write_pgm

__all__ = [
    "STACK_CHANNELS",
    "GafMatrix",
    "GafStack",
    "count_entries",
    "gadf",
    "gasf",
    "phase_encode",
    "asymmetric_gaf",
    "encode_signature",
    "encode_six_channel",
    "symmetric_gaf",
    "rasterize_trajectory",
    "decode_gaf6",
    "encode_gaf6",
    "read_gaf6",
    "write_gaf6",
    "write_pgm",
]
