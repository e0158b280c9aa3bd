"""GAF6 stack files and PGM inspection dumps."""

import struct
from pathlib import Path

import numpy as np
from PIL import Image

from src.exceptions import FormatError
from src.gaf.models import STACK_CHANNELS, GafStack

GAF6_MAGIC = b"GAF6"
_HEADER = struct.Struct("<II")


def encode_gaf6(stack: GafStack) -> bytes:
    """Serialise a stack: magic, u32 side, u32 channel count, float16 values (LE)."""
    values = np.ascontiguousarray(stack.channels, dtype="<f2")
    return GAF6_MAGIC + _HEADER.pack(stack.side, STACK_CHANNELS) + values.tobytes()


def decode_gaf6(data: bytes) -> GafStack:
    """Parse GAF6 bytes back into a stack (values widened to float64).

    Raises:
        FormatError: Bad magic, channel count, or truncated payload
    """
    if data[:4] != GAF6_MAGIC:
        raise FormatError("not a GAF6 file (bad magic)")
    if len(data) < 4 + _HEADER.size:
        raise FormatError("truncated GAF6 header")
    side, count = _HEADER.unpack_from(data, 4)
    if count != STACK_CHANNELS:
        raise FormatError(f"GAF6 stacks hold {STACK_CHANNELS} channels, file declares {count}")
    payload = data[4 + _HEADER.size :]
    expected = count * side * side * 2
    if len(payload) != expected:
        raise FormatError(f"GAF6 payload is {len(payload)} bytes, expected {expected}")
    values = np.frombuffer(payload, dtype="<f2").reshape(count, side, side).astype(np.float64)
    return GafStack(channels=values, M=2 * side)


def write_gaf6(path: Path, stack: GafStack) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_gaf6(stack))


def read_gaf6(path: Path) -> GafStack:
    return decode_gaf6(path.read_bytes())


def to_gray(values: np.ndarray) -> np.ndarray:
    """Map [-1, 1] onto 0..255 as round((g + 1) / 2 * 255), halves rounded up."""
    scaled = (np.clip(values, -1.0, 1.0) + 1.0) / 2.0 * 255.0
    return np.floor(scaled + 0.5).astype(np.uint8)


def write_pgm(path: Path, values: np.ndarray) -> None:
    """Write one field as a binary (P5, maxval 255) PGM image."""
    if values.ndim != 2:
        raise ValueError(f"PGM dump expects a 2-D field, got shape {values.shape}")
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(to_gray(values)).save(path, format="PPM")
