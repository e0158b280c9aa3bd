"""Global equal error rate over pooled genuine and impostor scores."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike


@dataclass(frozen=True)
class EerResult:
    eer: float
    threshold: float


def error_rates(genuine: np.ndarray, impostor: np.ndarray, tau: float) -> tuple[float, float]:
    """(FAR, FRR) at ``tau``: impostors scoring above it, genuines at or below it."""
    return float(np.mean(impostor > tau)), float(np.mean(genuine <= tau))


def compute_eer(genuine_scores: ArrayLike, impostor_scores: ArrayLike) -> EerResult:
    """Equal error rate and its threshold.

    Thresholds sweep the sorted distinct scores. At the first candidate where
    FAR - FRR is no longer positive the rates are either equal (returned as is)
    or the crossing is linearly interpolated from the previous candidate. Before
    the lowest score the sweep starts from FAR = 1, FRR = 0.

    Raises:
        ValueError: If either list is empty
    """
    genuine = np.asarray(genuine_scores, dtype=np.float64).ravel()
    impostor = np.asarray(impostor_scores, dtype=np.float64).ravel()
    if genuine.size == 0 or impostor.size == 0:
        raise ValueError("EER needs at least one genuine and one impostor score")

    candidates = np.unique(np.concatenate([genuine, impostor]))
    far = (impostor.size - np.searchsorted(np.sort(impostor), candidates, side="right")) / impostor.size
    frr = np.searchsorted(np.sort(genuine), candidates, side="right") / genuine.size
    gap = far - frr
    k = int(np.argmax(gap <= 0))  # last candidate always has FAR 0, FRR 1

    if gap[k] == 0:
        return EerResult(eer=float(far[k]), threshold=float(candidates[k]))
    if k == 0:
        prev_far, prev_frr, prev_tau = 1.0, 0.0, float(candidates[0])
    else:
        prev_far, prev_frr, prev_tau = float(far[k - 1]), float(frr[k - 1]), float(candidates[k - 1])
    prev_gap = prev_far - prev_frr
    alpha = prev_gap / (prev_gap - float(gap[k]))
    eer = prev_far + alpha * (float(far[k]) - prev_far)
    threshold = prev_tau + alpha * (float(candidates[k]) - prev_tau)
    return EerResult(eer=eer, threshold=threshold)
