"""Triplet, cluster-level forgery and uniformity objectives."""

import logging
from dataclasses import dataclass
from itertools import combinations

import torch
import torch.nn.functional as F

from src.config.models import LossConfig
from src.metric.batch import EpisodeBatch
from src.metric.mining import MiningReport, mine_triplets
from src.metric.similarity import cosine_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LossBreakdown:
    """Total objective and its unweighted components (tensors, graph attached).

    ``cluster`` is the mean over eligible forgeries and ``uniformity`` the raw
    log-potential; ``total`` applies lambda_f, lambda_u and the component toggles.
    """

    total: torch.Tensor
    sample: torch.Tensor
    cluster: torch.Tensor
    uniformity: torch.Tensor
    empty_anchors: bool = False

    def as_row(self) -> tuple[float, float, float, float]:
        """(loss_total, loss_tri_sample, loss_tri_cluster, loss_unif) as floats."""
        return (
            float(self.total.detach()),
            float(self.sample.detach()),
            float(self.cluster.detach()),
            float(self.uniformity.detach()),
        )


def _zero(reference: torch.Tensor) -> torch.Tensor:
    # stays connected to the graph so autograd sees every parameter
    return (reference * 0).sum()


def sample_triplet_term(sims: torch.Tensor, report: MiningReport, margin: float) -> torch.Tensor:
    """Mean over mined anchors of ReLU(s_in - s_ip + m); zero when no anchor was mined."""
    if not report.records:
        return _zero(sims)
    anchors = [r.anchor for r in report.records]
    s_ip = sims[anchors, [r.positive for r in report.records]]
    s_in = sims[anchors, [r.negative for r in report.records]]
    return F.relu(s_in - s_ip + margin).mean()


def cluster_forgery_term(sims: torch.Tensor, batch: EpisodeBatch, margin: float) -> torch.Tensor:
    """Mean over forgeries of ReLU(mean genuine-forgery cosine - mean genuine-pair cosine + m).

    Only forgeries whose target writer has at least two genuine rows count; the
    term is zero when none do.
    """
    rows_by_writer: dict[int, list[int]] = {}
    for row, label in enumerate(batch.genuine_labels):
        rows_by_writer.setdefault(label, []).append(row)

    terms = []
    for k, target in enumerate(batch.forgery_targets):
        rows = rows_by_writer.get(target, [])
        if len(rows) < 2:
            continue
        pairs = list(combinations(rows, 2))
        s_pos = sims[[i for i, _ in pairs], [j for _, j in pairs]].mean()
        s_neg = sims[rows, batch.n_genuine + k].mean()
        terms.append(F.relu(s_neg - s_pos + margin))
    if not terms:
        return _zero(sims)
    return torch.stack(terms).mean()


def uniformity_loss(embeddings: torch.Tensor) -> torch.Tensor:
    """log of the mean Gaussian potential exp(-|z_i - z_j|^2 / 2) over all ordered pairs, i = j included."""
    diff = embeddings[:, None, :] - embeddings[None, :, :]
    sq_dist = (diff * diff).sum(dim=-1)
    return torch.log(torch.exp(-sq_dist / 2).mean())


def triplet_loss(batch: EpisodeBatch, report: MiningReport, margin: float, lambda_f: float) -> torch.Tensor:
    sims = cosine_matrix(batch.embeddings)
    return sample_triplet_term(sims, report, margin) + lambda_f * cluster_forgery_term(sims, batch, margin)


def total_loss(batch: EpisodeBatch, config: LossConfig, report: MiningReport | None = None) -> LossBreakdown:
    """Weighted objective; mines triplets unless a (frozen) report is supplied."""
    if report is None:
        report = mine_triplets(batch, config.margin)
    embeddings = batch.embeddings
    sims = cosine_matrix(embeddings)

    sample = sample_triplet_term(sims, report, config.margin)
    cluster = cluster_forgery_term(sims, batch, config.margin)
    uniformity = uniformity_loss(embeddings)

    total = _zero(sims)
    if config.sample_term:
        total = total + sample
    if config.cluster_term:
        total = total + config.lambda_f * cluster
    if config.uniformity_term:
        total = total + config.lambda_u * uniformity

    empty = not report.records
    if empty:
        logger.warning("No anchor had both a positive and a negative; sample-level term is 0")
    return LossBreakdown(total=total, sample=sample, cluster=cluster, uniformity=uniformity, empty_anchors=empty)
