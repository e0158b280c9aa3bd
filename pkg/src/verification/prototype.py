"""Enrollment prototypes, similarity scores and threshold decisions."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from src.config.enums import Decision


@dataclass(frozen=True, eq=False)
class Prototype:
    """Mean of a writer's reference embeddings, deliberately not renormalised."""

    z_bar: np.ndarray
    count: int


def enroll(embeddings: ArrayLike) -> Prototype:
    """Average R_enroll >= 1 reference embeddings.

    Raises:
        ValueError: If no embedding is given
    """
    refs = np.atleast_2d(np.asarray(embeddings, dtype=np.float64))
    if refs.shape[0] == 0 or refs.size == 0:
        raise ValueError("enrollment needs at least one reference embedding")
    return Prototype(z_bar=refs.sum(axis=0) / refs.shape[0], count=int(refs.shape[0]))


def score(query: ArrayLike, prototype: Prototype) -> float:
    """Dot product of the query embedding with the prototype."""
    q = np.asarray(query, dtype=np.float64)
    if q.shape != prototype.z_bar.shape:
        raise ValueError(f"query width {q.shape} does not match prototype {prototype.z_bar.shape}")
    return float(q @ prototype.z_bar)


def decide(s: float, tau: float) -> Decision:
    """Accept only when the score strictly exceeds the threshold."""
    return Decision.ACCEPT if s > tau else Decision.REJECT
