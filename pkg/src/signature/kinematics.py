"""Kinematic series from pen samples: derivatives, resampling, normalisation."""

import numpy as np
from numpy.typing import ArrayLike

from src.exceptions import DegenerateStepError
from src.signature.models import KinematicChannels, RawSignature


def central_diff(series: ArrayLike, timestamps: ArrayLike) -> np.ndarray:
    """Derivative by central differences, one-sided first differences at the ends.

    Interior samples use (s[i+1] - s[i-1]) / (t[i+1] - t[i-1]); the output has
    the same length as the input.

    Raises:
        ValueError: Fewer than two samples or mismatched lengths
        DegenerateStepError: Two consecutive timestamps are not strictly increasing
    """
    s = np.asarray(series, dtype=np.float64)
    t = np.asarray(timestamps, dtype=np.float64)
    if s.ndim != 1 or s.shape != t.shape:
        raise ValueError("series and timestamps must be 1-D arrays of equal length")
    if s.shape[0] < 2:
        raise ValueError("central_diff needs at least two samples")
    dt = np.diff(t)
    bad = np.flatnonzero(dt <= 0)
    if bad.size:
        raise DegenerateStepError(int(bad[0]))

    out = np.empty_like(s)
    out[1:-1] = (s[2:] - s[:-2]) / (t[2:] - t[:-2])
    out[0] = (s[1] - s[0]) / dt[0]
    out[-1] = (s[-1] - s[-2]) / dt[-1]
    return out


def direction_angle(vx: np.ndarray, vy: np.ndarray) -> np.ndarray:
    """Full-quadrant direction in (-pi, pi]; pen pauses carry the previous angle."""
    theta = np.arctan2(vy, vx)
    theta[theta == -np.pi] = np.pi
    moving = (vx != 0) | (vy != 0)
    theta[~moving] = 0.0
    # forward-fill the last moving index over pauses
    last_moving = np.where(moving, np.arange(theta.shape[0]), 0)
    np.maximum.accumulate(last_moving, out=last_moving)
    return theta[last_moving]


def kinematics(sig: RawSignature) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return raw (speed, pressure derivative, direction angle) at the signature's samples."""
    vx = central_diff(sig.x, sig.t)
    vy = central_diff(sig.y, sig.t)
    v = np.hypot(vx, vy)
    p_dot = central_diff(sig.p, sig.t)
    return v, p_dot, direction_angle(vx, vy)


def resample(series: ArrayLike, timestamps: ArrayLike, M: int) -> np.ndarray:
    """Linear interpolation at M instants spaced uniformly over [t_0, t_{n-1}]."""
    s = np.asarray(series, dtype=np.float64)
    t = np.asarray(timestamps, dtype=np.float64)
    if s.shape[0] < 2 or M < 2:
        raise ValueError(f"resample needs n >= 2 and M >= 2, got n={s.shape[0]}, M={M}")
    grid = np.linspace(t[0], t[-1], M)
    return np.interp(grid, t, s)


def minmax_normalize(series: ArrayLike) -> np.ndarray:
    """Map onto [-1, 1] by min-max scaling; constant series map to zeros."""
    x = np.asarray(series, dtype=np.float64)
    if x.size == 0:
        raise ValueError("cannot normalise an empty series")
    lo, hi = x.min(), x.max()
    if hi == lo:
        return np.zeros_like(x)
    return np.clip(2.0 * (x - lo) / (hi - lo) - 1.0, -1.0, 1.0)


def extract_channels(sig: RawSignature, M: int) -> KinematicChannels:
    """Kinematics, resampled to M points and normalised channel by channel."""
    v, p_dot, theta = kinematics(sig)
    v_n, p_n, theta_n = (minmax_normalize(resample(series, sig.t, M)) for series in (v, p_dot, theta))
    return KinematicChannels(v=v_n, p_dot=p_n, theta=theta_n)
