"""Signature and kinematic series containers."""

from dataclasses import dataclass

import numpy as np

from src.config.enums import SignatureLabel

MIN_SAMPLES = 4


def _frozen(values: np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False, slots=True)
class RawSignature:
    """Time-stamped pen samples of one signing act.

    Arrays are read-only float64 copies; the constructor enforces the sample
    invariants (length, strictly increasing time, non-negative pressure).
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    p: np.ndarray
    writer_id: str
    label: SignatureLabel

    def __post_init__(self) -> None:
        for name in ("t", "x", "y", "p"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        n = self.t.shape[0]
        if self.t.ndim != 1 or any(getattr(self, name).shape != (n,) for name in ("x", "y", "p")):
            raise ValueError("t, x, y and p must be 1-D arrays of equal length")
        if n < MIN_SAMPLES:
            raise ValueError(f"a signature needs at least {MIN_SAMPLES} samples, got {n}")
        if not np.all(np.diff(self.t) > 0):
            raise ValueError("timestamps must be strictly increasing")
        if np.any(self.p < 0):
            raise ValueError("pressure must be non-negative")
        if not self.writer_id or any(ch.isspace() for ch in self.writer_id):
            raise ValueError(f"writer_id must be a non-empty token, got {self.writer_id!r}")

    @property
    def n_samples(self) -> int:
        return int(self.t.shape[0])

    @property
    def samples(self) -> np.ndarray:
        """(n, 4) array of (t, x, y, p) rows in file order."""
        return np.column_stack([self.t, self.x, self.y, self.p])


@dataclass(frozen=True, eq=False, slots=True)
class KinematicChannels:
    """The three normalised kinematic series at a common even length M."""

    v: np.ndarray
    p_dot: np.ndarray
    theta: np.ndarray

    def __post_init__(self) -> None:
        for name in ("v", "p_dot", "theta"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        m = self.v.shape[0]
        if self.p_dot.shape != (m,) or self.theta.shape != (m,):
            raise ValueError("kinematic channels must share one length")
        if m < 2 or m % 2:
            raise ValueError(f"kinematic length M must be a positive even integer, got {m}")

    @property
    def M(self) -> int:
        return int(self.v.shape[0])

    def as_tuple(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Series in canonical [v, dp, theta] order."""
        return self.v, self.p_dot, self.theta
