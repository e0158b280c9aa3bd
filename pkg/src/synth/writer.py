"""Per-writer generative parameters for synthetic signatures."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

COMPONENTS = 3
AMPLITUDE_RANGE = (0.5, 2.0)
FREQUENCY_RANGE = (0.3, 3.0)  # Hz
DRIFT_RANGE = (1.0, 3.0)
BASELINE_RANGE = (0.3, 0.6)
BUMPS = 3
BUMP_CENTER_RANGE = (0.1, 0.9)
BUMP_WIDTH_RANGE = (0.05, 0.2)
BUMP_HEIGHT_RANGE = (0.2, 0.5)
DURATION_RANGE = (1.5, 3.0)  # seconds
SAMPLE_RATES = (100, 125, 200)


@dataclass(frozen=True, eq=False)
class SinusoidBank:
    """Sum of K sinusoids; frequencies in Hz over the signing time."""

    amplitudes: np.ndarray
    frequencies: np.ndarray
    phases: np.ndarray

    def __post_init__(self) -> None:
        k = self.amplitudes.shape[0]
        if k < 2 or self.frequencies.shape != (k,) or self.phases.shape != (k,):
            raise ValueError("a sinusoid bank needs K >= 2 matching amplitude/frequency/phase entries")
        if np.any(self.frequencies <= 0):
            raise ValueError("sinusoid frequencies must be positive")

    def __call__(self, t: np.ndarray, amplitudes: np.ndarray | None = None, phases: np.ndarray | None = None) -> np.ndarray:
        a = self.amplitudes if amplitudes is None else amplitudes
        phi = self.phases if phases is None else phases
        angles = 2 * np.pi * self.frequencies[np.newaxis, :] * t[:, np.newaxis] + phi[np.newaxis, :]
        return np.sin(angles) @ a


@dataclass(frozen=True, eq=False)
class PressureProfile:
    """Baseline plus Gaussian bumps over normalised time u in [0, 1]."""

    baseline: float
    centers: np.ndarray
    widths: np.ndarray
    heights: np.ndarray

    def __call__(self, u: np.ndarray, scale: np.ndarray | None = None) -> np.ndarray:
        heights = self.heights if scale is None else self.heights * scale
        bumps = np.exp(-((u[:, np.newaxis] - self.centers) ** 2) / (2 * self.widths**2))
        return self.baseline + bumps @ heights


@dataclass(frozen=True, eq=False)
class WriterParams:
    x: SinusoidBank
    y: SinusoidBank
    drift: float
    pressure: PressureProfile
    duration: float
    rate: int

    def __post_init__(self) -> None:
        if self.duration <= 0 or self.rate <= 0:
            raise ValueError("duration and sample rate must be positive")

    @property
    def n_samples(self) -> int:
        return int(round(self.duration * self.rate))


def _uniform(rng: np.random.Generator, bounds: tuple[float, float], size: int | None = None) -> np.ndarray:
    return rng.uniform(bounds[0], bounds[1], size=size)


def draw_bank(rng: np.random.Generator) -> SinusoidBank:
    return SinusoidBank(
        amplitudes=_uniform(rng, AMPLITUDE_RANGE, COMPONENTS),
        frequencies=_uniform(rng, FREQUENCY_RANGE, COMPONENTS),
        phases=rng.uniform(0.0, 2 * np.pi, size=COMPONENTS),
    )


def draw_pressure(rng: np.random.Generator, baseline: float | None = None) -> PressureProfile:
    return PressureProfile(
        baseline=float(_uniform(rng, BASELINE_RANGE)) if baseline is None else baseline,
        centers=_uniform(rng, BUMP_CENTER_RANGE, BUMPS),
        widths=_uniform(rng, BUMP_WIDTH_RANGE, BUMPS),
        heights=_uniform(rng, BUMP_HEIGHT_RANGE, BUMPS),
    )


def make_writer(seed: int | Sequence[int]) -> WriterParams:
    """Draw a writer's parameters from the fixed ranges; deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    return WriterParams(
        x=draw_bank(rng),
        y=draw_bank(rng),
        drift=float(_uniform(rng, DRIFT_RANGE)),
        pressure=draw_pressure(rng),
        duration=float(_uniform(rng, DURATION_RANGE)),
        rate=int(rng.choice(SAMPLE_RATES)),
    )
