"""Genuine samples and skilled forgeries drawn from a writer's parameters."""

from dataclasses import dataclass

import numpy as np
from scipy import stats

from src.config.enums import SignatureLabel
from src.signature.kinematics import kinematics, resample
from src.signature.models import RawSignature
from src.synth.writer import PressureProfile, WriterParams, draw_pressure


@dataclass(frozen=True)
class Jitter:
    """Bounds of the per-sample variation a writer shows between signing acts."""

    amplitude: float = 0.03  # relative
    phase: float = 0.05  # radians
    pressure: float = 0.05  # relative, on bump heights

    def draw(self, writer: WriterParams, rng: np.random.Generator) -> "JitterDraw":
        k_x = writer.x.amplitudes.shape[0]
        k_y = writer.y.amplitudes.shape[0]
        bumps = writer.pressure.heights.shape[0]
        return JitterDraw(
            x_amplitudes=writer.x.amplitudes * (1 + rng.uniform(-self.amplitude, self.amplitude, k_x)),
            x_phases=writer.x.phases + rng.uniform(-self.phase, self.phase, k_x),
            y_amplitudes=writer.y.amplitudes * (1 + rng.uniform(-self.amplitude, self.amplitude, k_y)),
            y_phases=writer.y.phases + rng.uniform(-self.phase, self.phase, k_y),
            pressure_scale=1 + rng.uniform(-self.pressure, self.pressure, bumps),
        )


NO_JITTER = Jitter(amplitude=0.0, phase=0.0, pressure=0.0)


@dataclass(frozen=True, eq=False)
class JitterDraw:
    x_amplitudes: np.ndarray
    x_phases: np.ndarray
    y_amplitudes: np.ndarray
    y_phases: np.ndarray
    pressure_scale: np.ndarray


def _render(
    writer: WriterParams,
    draw: JitterDraw,
    u_path: np.ndarray,
    u_pressure: np.ndarray,
    profile: PressureProfile,
    pressure_scale: np.ndarray | None,
    writer_id: str,
    label: SignatureLabel,
) -> RawSignature:
    t = np.arange(writer.n_samples) / writer.rate
    path_t = u_path * writer.duration
    x = writer.drift * u_path + writer.x(path_t, draw.x_amplitudes, draw.x_phases)
    y = writer.y(path_t, draw.y_amplitudes, draw.y_phases)
    p = np.maximum(profile(u_pressure, pressure_scale), 0.0)
    return RawSignature(t=t, x=x, y=y, p=p, writer_id=writer_id, label=label)


def _unit_time(writer: WriterParams) -> np.ndarray:
    return np.arange(writer.n_samples) / writer.rate / writer.duration


def genuine_sample(
    writer: WriterParams,
    rng: np.random.Generator,
    writer_id: str = "w000",
    jitter: Jitter = Jitter(),
) -> RawSignature:
    """Evaluate the writer's curves under a fresh jitter draw."""
    draw = jitter.draw(writer, rng)
    u = _unit_time(writer)
    return _render(writer, draw, u, u, writer.pressure, draw.pressure_scale, writer_id, SignatureLabel.GENUINE)


def time_warp(u: np.ndarray, amplitude: float, rng: np.random.Generator) -> np.ndarray:
    """Smooth monotone warp u + sum_j c_j sin(pi j u), |c_j| <= A / (2 pi j), endpoints fixed."""
    warped = u.copy()
    for j in (1, 2):
        c = rng.uniform(-1.0, 1.0) * amplitude / (2 * np.pi * j)
        warped = warped + c * np.sin(np.pi * j * u)
    return warped


def skilled_forgery(
    writer: WriterParams,
    rng: np.random.Generator,
    writer_id: str = "w000",
    warp_amplitude: float = 0.3,
    jitter: Jitter = Jitter(),
    resample_pressure: bool = True,
) -> RawSignature:
    """Same curve family traced on a time-warped grid with a freshly drawn pressure profile.

    The jitter draw comes first so that ``warp_amplitude=0`` with
    ``resample_pressure=False`` reproduces the genuine sample of the same rng state.
    """
    draw = jitter.draw(writer, rng)
    u = _unit_time(writer)
    warped = time_warp(u, warp_amplitude, rng)
    if resample_pressure:
        profile, scale = draw_pressure(rng, baseline=writer.pressure.baseline), None
    else:
        profile, scale = writer.pressure, draw.pressure_scale
    return _render(writer, draw, warped, u, profile, scale, writer_id, SignatureLabel.SKILLED_FORGERY)


def speed_correlation(a: RawSignature, b: RawSignature, M: int = 64) -> float:
    """Pearson correlation of the two speed profiles resampled to M points."""
    speed_a = resample(kinematics(a)[0], a.t, M)
    speed_b = resample(kinematics(b)[0], b.t, M)
    return float(stats.pearsonr(speed_a, speed_b).statistic)
