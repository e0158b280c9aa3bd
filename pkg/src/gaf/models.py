"""Gramian angular field containers."""

from dataclasses import dataclass

import numpy as np

from src.config.enums import GafKind

STACK_CHANNELS = 6


@dataclass(frozen=True, eq=False, slots=True)
class GafMatrix:
    """One square field with entries in [-1, 1]."""

    kind: GafKind
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"GAF matrix must be square, got shape {values.shape}")
        if values.size and (values.min() < -1.0 or values.max() > 1.0):
            raise ValueError("GAF entries must lie in [-1, 1]")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def size(self) -> int:
        return int(self.values.shape[0])


@dataclass(frozen=True, eq=False, slots=True)
class GafStack:
    """Six fields of side M/2 ordered [v-GASF, v-GADF, dp-GASF, dp-GADF, theta-GASF, theta-GADF]."""

    channels: np.ndarray
    M: int

    def __post_init__(self) -> None:
        channels = np.asarray(self.channels)
        side = self.M // 2
        if channels.shape != (STACK_CHANNELS, side, side):
            raise ValueError(
                f"GAF stack for M={self.M} must have shape {(STACK_CHANNELS, side, side)}, got {channels.shape}"
            )
        if channels.size and (channels.min() < -1.0 or channels.max() > 1.0):
            raise ValueError("GAF stack entries must lie in [-1, 1]")
        channels.setflags(write=False)
        object.__setattr__(self, "channels", channels)

    @property
    def side(self) -> int:
        return self.M // 2

    @property
    def summation(self) -> np.ndarray:
        """GASF view (channels 0, 2, 4)."""
        return self.channels[0::2]

    @property
    def difference(self) -> np.ndarray:
        """GADF view (channels 1, 3, 5)."""
        return self.channels[1::2]
