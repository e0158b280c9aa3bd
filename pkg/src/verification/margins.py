"""Genuine-genuine versus genuine-forgery cosine margins."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import combinations

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarginStats:
    """Pooled means over every eligible pair; ``delta`` is mu_g - mu_f.

    A mean is ``nan`` when no writer contributed pairs to it.
    """

    mu_g: float
    mu_f: float
    delta: float
    genuine_pairs: int
    forgery_pairs: int
    omitted: tuple[str, ...] = ()


def genuine_pair_cosines(genuine: np.ndarray) -> np.ndarray:
    """Cosines of all unordered pairs of a writer's genuine embeddings."""
    return np.array([float(genuine[i] @ genuine[j]) for i, j in combinations(range(len(genuine)), 2)])


def forgery_pair_cosines(genuine: np.ndarray, forgeries: np.ndarray) -> np.ndarray:
    """Cosines of every (genuine, forgery) pair of one writer."""
    if len(genuine) == 0 or len(forgeries) == 0:
        return np.zeros(0)
    return (np.asarray(genuine) @ np.asarray(forgeries).T).ravel()


def margin_stats(
    genuine_by_writer: Mapping[str, np.ndarray],
    forgeries_by_writer: Mapping[str, np.ndarray],
) -> MarginStats:
    """Pool same-writer genuine pairs (mu_g) and genuine-forgery pairs (mu_f).

    Writers with fewer than two genuines are left out of mu_g, and writers
    without forgeries out of mu_f; each omission is logged as a warning.
    """
    gg: list[np.ndarray] = []
    gf: list[np.ndarray] = []
    omitted: list[str] = []
    for writer_id, genuine in genuine_by_writer.items():
        genuine = np.atleast_2d(np.asarray(genuine, dtype=np.float64))
        forgeries = np.asarray(forgeries_by_writer.get(writer_id, np.zeros((0, genuine.shape[1]))))
        if len(genuine) < 2:
            logger.warning(f"Writer {writer_id}: fewer than two genuines, omitted from mu_g")
            omitted.append(writer_id)
        else:
            gg.append(genuine_pair_cosines(genuine))
        if len(forgeries) == 0:
            logger.warning(f"Writer {writer_id}: no forgeries, omitted from mu_f")
            if writer_id not in omitted:
                omitted.append(writer_id)
        else:
            gf.append(forgery_pair_cosines(genuine, forgeries))

    gg_all = np.concatenate(gg) if gg else np.zeros(0)
    gf_all = np.concatenate(gf) if gf else np.zeros(0)
    mu_g = float(gg_all.mean()) if gg_all.size else float("nan")
    mu_f = float(gf_all.mean()) if gf_all.size else float("nan")
    return MarginStats(
        mu_g=mu_g,
        mu_f=mu_f,
        delta=mu_g - mu_f,
        genuine_pairs=int(gg_all.size),
        forgery_pairs=int(gf_all.size),
        omitted=tuple(omitted),
    )
