"""Signature ingestion: text format and kinematic series."""

from src.signature.models import MIN_SAMPLES, KinematicChannels, RawSignature
from src.signature.parser import parse_signature, read_signature, serialize_signature, write_signature
from src.signature.kinematics import (
    central_diff,
    extract_channels,
    kinematics,
    minmax_normalize,
    resample,
)

__all__ = [
    "MIN_SAMPLES",
    "KinematicChannels",
    "RawSignature",
    "parse_signature",
    "read_signature",
    "serialize_signature",
    "write_signature",
    "central_diff",
    "extract_channels",
    "kinematics",
    "minmax_normalize",
    "resample",
]
