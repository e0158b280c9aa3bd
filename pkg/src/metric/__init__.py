"""Cosine-space mining and the training objective."""

from src.metric.batch import EpisodeBatch
from src.metric.similarity import cosine_matrix
from src.metric.mining import NO_NEGATIVE, NO_POSITIVE, MiningReport, SkippedAnchor, TripletRecord, mine_triplets
from src.metric.losses import (
    LossBreakdown,
    cluster_forgery_term,
    sample_triplet_term,
    total_loss,
    triplet_loss,
    uniformity_loss,
)

__all__ = [
    "EpisodeBatch",
    "cosine_matrix",
    "NO_NEGATIVE",
    "NO_POSITIVE",
    "MiningReport",
    "SkippedAnchor",
    "TripletRecord",
    "mine_triplets",
    "LossBreakdown",
    "cluster_forgery_term",
    "sample_triplet_term",
    "total_loss",
    "triplet_loss",
    "uniformity_loss",
]
