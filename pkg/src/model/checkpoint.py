"""GAFW checkpoint files: flat config block plus named parameter and buffer arrays."""

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

import numpy as np
import torch

from src.config.enums import Precision
from src.config.flat import flatten, nest
from src.config.kv_source import parse_key_values, render_key_values
from src.config.models import TrainConfig
from src.exceptions import FormatError
from src.model.encoder import SignatureEncoder, build_encoder, torch_dtype

GAFW_MAGIC = b"GAFW"
FLOAT32_VERSION = 1
FLOAT64_VERSION = 2
_VALUE_DTYPES = {FLOAT32_VERSION: np.dtype("<f4"), FLOAT64_VERSION: np.dtype("<f8")}
_U32 = struct.Struct("<I")
STEP_KEY = "step"


@dataclass(frozen=True)
class Checkpoint:
    """Decoded checkpoint: run configuration, completed step count and named arrays."""

    config: TrainConfig
    step: int
    arrays: dict[str, np.ndarray]
    version: int

    def restore(self) -> SignatureEncoder:
        """Rebuild the encoder and load the stored arrays into it."""
        model = build_encoder(self.config.encoder)
        target_dtype = torch_dtype(self.config.encoder.precision)
        state = {}
        for name, reference in model.state_dict().items():
            if name not in self.arrays:
                raise FormatError(f"checkpoint is missing array '{name}'")
            dtype = reference.dtype if not reference.is_floating_point() else target_dtype
            state[name] = torch.as_tensor(self.arrays[name].copy()).to(dtype)
        unexpected = set(self.arrays) - set(state)
        if unexpected:
            raise FormatError(f"checkpoint holds unknown arrays: {sorted(unexpected)}")
        model.load_state_dict(state)
        return model


def default_version(config: TrainConfig) -> int:
    return FLOAT64_VERSION if config.encoder.precision is Precision.FLOAT64 else FLOAT32_VERSION


def _write_u32(out: BinaryIO, value: int) -> None:
    out.write(_U32.pack(value))


def write_checkpoint(
    path: Path,
    model: SignatureEncoder,
    config: TrainConfig,
    step: int = 0,
    version: int | None = None,
) -> None:
    """Serialise every parameter and buffer of ``model`` with the run config."""
    version = default_version(config) if version is None else version
    if version not in _VALUE_DTYPES:
        raise FormatError(f"unsupported checkpoint version {version}")
    block = render_key_values({**flatten(config), STEP_KEY: str(step)}).encode("utf-8")
    state = model.state_dict()

    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("wb") as out:
        out.write(GAFW_MAGIC)
        _write_u32(out, version)
        _write_u32(out, len(block))
        out.write(block)
        _write_u32(out, len(state))
        for name, tensor in state.items():
            encoded = name.encode("utf-8")
            _write_u32(out, len(encoded))
            out.write(encoded)
            values = tensor.detach().cpu().numpy()
            _write_u32(out, values.ndim)
            for dim in values.shape:
                _write_u32(out, dim)
            out.write(np.ascontiguousarray(values, dtype=_VALUE_DTYPES[version]).tobytes())


class _Reader:
    def __init__(self, data: bytes) -> None:
        self._data = data
        self._pos = 0

    def take(self, size: int) -> bytes:
        if self._pos + size > len(self._data):
            raise FormatError("truncated checkpoint")
        chunk = self._data[self._pos : self._pos + size]
        self._pos += size
        return chunk

    def u32(self) -> int:
        return int(_U32.unpack(self.take(4))[0])

    @property
    def exhausted(self) -> bool:
        return self._pos == len(self._data)


def read_checkpoint(path: Path) -> Checkpoint:
    """Parse a GAFW file of either version.

    Raises:
        FormatError: Bad magic, unknown version or a truncated/trailing payload
    """
    reader = _Reader(path.read_bytes())
    if reader.take(4) != GAFW_MAGIC:
        raise FormatError(f"{path} is not a GAFW checkpoint")
    version = reader.u32()
    if version not in _VALUE_DTYPES:
        raise FormatError(f"unsupported checkpoint version {version}")
    flat = parse_key_values(reader.take(reader.u32()).decode("utf-8"), f"checkpoint {path}")
    try:
        step = int(flat.pop(STEP_KEY, "0"))
        config = TrainConfig.model_validate(nest(flat))
    except (KeyError, ValueError) as e:
        raise FormatError(f"invalid config block in {path}: {e}") from e

    value_dtype = _VALUE_DTYPES[version]
    arrays: dict[str, np.ndarray] = {}
    for _ in range(reader.u32()):
        name = reader.take(reader.u32()).decode("utf-8")
        shape = tuple(reader.u32() for _ in range(reader.u32()))
        count = int(np.prod(shape, dtype=np.int64))
        raw = reader.take(count * value_dtype.itemsize)
        arrays[name] = np.frombuffer(raw, dtype=value_dtype).reshape(shape)
    if not reader.exhausted:
        raise FormatError(f"trailing bytes after the last array in {path}")
    return Checkpoint(config=config, step=step, arrays=arrays, version=version)
