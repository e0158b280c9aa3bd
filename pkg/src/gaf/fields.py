"""Phase encoding and the summation/difference Gramian fields."""

from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.config.enums import GafKind
from src.gaf.models import GafMatrix


@dataclass
class EntryCounter:
    """Number of matrix entries evaluated while the counter was active."""

    entries: int = 0


_active_counter: ContextVar[EntryCounter | None] = ContextVar("gaf_entry_counter", default=None)


@contextmanager
def count_entries() -> Iterator[EntryCounter]:
    """Count GAF entry evaluations made in the current context."""
    counter = EntryCounter()
    token = _active_counter.set(counter)
    try:
        yield counter
    finally:
        _active_counter.reset(token)


def _record(entries: int) -> None:
    counter = _active_counter.get()
    if counter is not None:
        counter.entries += entries


def _clamped(x_tilde: ArrayLike) -> np.ndarray:
    x = np.asarray(x_tilde, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"expected a 1-D series, got shape {x.shape}")
    return np.clip(x, -1.0, 1.0)


def phase_encode(x_tilde: ArrayLike) -> np.ndarray:
    """Angle arccos(x) in [0, pi], inputs clamped to [-1, 1]."""
    return np.arccos(np.clip(np.asarray(x_tilde, dtype=np.float64), -1.0, 1.0))


def gasf_values(x_tilde: ArrayLike) -> np.ndarray:
    """cos(phi_i + phi_j) via x_i x_j - sqrt(1 - x_i^2) sqrt(1 - x_j^2)."""
    x = _clamped(x_tilde)
    s = np.sqrt(1.0 - x * x)
    _record(x.size * x.size)
    return np.clip(np.outer(x, x) - np.outer(s, s), -1.0, 1.0)


def gadf_values(x_tilde: ArrayLike) -> np.ndarray:
    """sin(phi_i - phi_j) via sqrt(1 - x_i^2) x_j - x_i sqrt(1 - x_j^2); zero diagonal."""
    x = _clamped(x_tilde)
    s = np.sqrt(1.0 - x * x)
    _record(x.size * x.size)
    g = np.outer(s, x)
    g = g - g.T
    return np.clip(g, -1.0, 1.0)


def field_values(x_tilde: ArrayLike, kind: GafKind) -> np.ndarray:
    return gasf_values(x_tilde) if kind is GafKind.GASF else gadf_values(x_tilde)


def gasf(x_tilde: ArrayLike) -> GafMatrix:
    return GafMatrix(GafKind.GASF, gasf_values(x_tilde))


def gadf(x_tilde: ArrayLike) -> GafMatrix:
    return GafMatrix(GafKind.GADF, gadf_values(x_tilde))
