"""Semi-hard triplet selection in cosine space."""

import logging
from dataclasses import dataclass, field

import numpy as np

from src.metric.batch import EpisodeBatch
from src.metric.similarity import cosine_matrix

logger = logging.getLogger(__name__)

NO_POSITIVE = "no positive"
NO_NEGATIVE = "no negative"


@dataclass(frozen=True)
class TripletRecord:
    anchor: int
    positive: int
    negative: int
    s_ip: float
    s_in: float
    semi_hard: bool


@dataclass(frozen=True)
class SkippedAnchor:
    anchor: int
    reason: str


@dataclass(frozen=True)
class MiningReport:
    """Selected (anchor, positive, negative) triplets and the anchors left out."""

    records: tuple[TripletRecord, ...] = ()
    skipped: tuple[SkippedAnchor, ...] = field(default_factory=tuple)

    @property
    def semi_hard_fraction(self) -> float:
        if not self.records:
            return 0.0
        return sum(r.semi_hard for r in self.records) / len(self.records)

    def to_text(self) -> str:
        """One `anchor p n s_ip s_in semihard` line per triplet."""
        return "".join(
            f"{r.anchor} {r.positive} {r.negative} {r.s_ip!r} {r.s_in!r} {int(r.semi_hard)}\n"
            for r in self.records
        )


def mine_triplets(batch: EpisodeBatch, margin: float) -> MiningReport:
    """Pick the hardest positive and a semi-hard negative for every genuine anchor.

    Candidates are compared on detached similarities. The negative zone is the
    open interval (s_ip - margin, s_ip); when it is empty the highest-cosine
    negative is used instead. Ties go to the lowest index. Forgeries are only
    ever negatives.
    """
    sims = cosine_matrix(batch.embeddings.detach()).cpu().numpy()
    labels = batch.labels
    n_g = batch.n_genuine
    genuine_labels = labels[:n_g]
    all_indices = np.arange(batch.size)

    records: list[TripletRecord] = []
    skipped: list[SkippedAnchor] = []
    for anchor in range(n_g):
        row = sims[anchor]
        positives = np.flatnonzero(genuine_labels == labels[anchor])
        positives = positives[positives != anchor]
        if positives.size == 0:
            skipped.append(SkippedAnchor(anchor, NO_POSITIVE))
            continue
        positive = int(positives[np.argmin(row[positives])])
        s_ip = float(row[positive])

        candidates = all_indices[labels != labels[anchor]]
        if candidates.size == 0:
            skipped.append(SkippedAnchor(anchor, NO_NEGATIVE))
            continue
        in_zone = candidates[(row[candidates] > s_ip - margin) & (row[candidates] < s_ip)]
        semi_hard = in_zone.size > 0
        pool = in_zone if semi_hard else candidates
        negative = int(pool[np.argmax(row[pool])])
        records.append(TripletRecord(anchor, positive, negative, s_ip, float(row[negative]), semi_hard))

    if skipped:
        logger.debug(f"Mining skipped {len(skipped)} of {n_g} anchors")
    return MiningReport(records=tuple(records), skipped=tuple(skipped))
