"""Writer-independent verification protocol over an evaluation split."""

import logging
import math

import numpy as np
import torch

from src.config.enums import Mode
from src.config.models import EvalConfig
from src.exceptions import InsufficientDataError
from src.model.encoder import SignatureEncoder, images_to_tensor
from src.training.dataset import Dataset
from src.verification.eer import compute_eer
from src.verification.margins import forgery_pair_cosines, genuine_pair_cosines, margin_stats
from src.verification.prototype import enroll
from src.verification.report import EvalReport, MarginReport, ScoreLists, WriterResult

logger = logging.getLogger(__name__)


def _finite(value: float) -> float | None:
    return value if math.isfinite(value) else None


def embed_images(model: SignatureEncoder, images: tuple[np.ndarray, ...]) -> np.ndarray:
    """Inference-mode embeddings as a (n, d_z) float64 array."""
    if not images:
        return np.zeros((0, model.config.d_z))
    with torch.no_grad():
        z = model.embed(images_to_tensor(images, model.dtype), Mode.INFER)
    return z.cpu().numpy().astype(np.float64)


def evaluate(model: SignatureEncoder, dataset: Dataset, config: EvalConfig) -> EvalReport:
    """Score every eval writer against its prototype and pool the EERs.

    The first ``config.enroll`` genuines of a writer (file order) form the
    prototype and its remaining genuines are positive queries. Skilled
    negatives are the writer's forgeries; random negatives are one genuine,
    drawn with ``config.seed``, from every other writer.

    Raises:
        InsufficientDataError: A writer has no genuine left to query
    """
    for writer in dataset.writers:
        if len(writer.genuine) < config.enroll + 1:
            raise InsufficientDataError(
                f"writer {writer.writer_id} has {len(writer.genuine)} genuines, "
                f"{config.enroll + 1} needed to enroll {config.enroll}",
                writer_id=writer.writer_id,
            )

    genuine = {w.writer_id: embed_images(model, w.genuine) for w in dataset.writers}
    forgeries = {w.writer_id: embed_images(model, w.forgeries) for w in dataset.writers}
    rng = np.random.default_rng(config.seed)

    genuine_scores: list[float] = []
    skilled_scores: list[float] = []
    random_scores: list[float] = []
    per_writer: list[WriterResult] = []
    ids = list(genuine)
    for writer_id in ids:
        prototype = enroll(genuine[writer_id][: config.enroll])
        queries = genuine[writer_id][config.enroll :] @ prototype.z_bar
        skilled = forgeries[writer_id] @ prototype.z_bar
        for other in ids:
            if other != writer_id:
                pick = int(rng.integers(len(genuine[other])))
                random_scores.append(float(genuine[other][pick] @ prototype.z_bar))
        genuine_scores.extend(queries.tolist())
        skilled_scores.extend(skilled.tolist())

        gg = genuine_pair_cosines(genuine[writer_id])
        gf = forgery_pair_cosines(genuine[writer_id], forgeries[writer_id])
        mu_g = float(gg.mean()) if gg.size else None
        mu_f = float(gf.mean()) if gf.size else None
        per_writer.append(
            WriterResult(
                writer_id=writer_id,
                queries=int(queries.size),
                forgeries=int(skilled.size),
                sf_eer=compute_eer(queries, skilled).eer if skilled.size else None,
                mu_g=mu_g,
                mu_f=mu_f,
                delta=mu_g - mu_f if mu_g is not None and mu_f is not None else None,
            )
        )

    sf = compute_eer(genuine_scores, skilled_scores) if skilled_scores else None
    rf = compute_eer(genuine_scores, random_scores) if random_scores else None
    if sf is None:
        logger.warning("No skilled forgeries in the evaluation split; sf EER not computed")
    if rf is None:
        logger.warning("Fewer than two evaluation writers; rf EER not computed")
    margins = margin_stats(genuine, forgeries)
    return EvalReport(
        enroll=config.enroll,
        sf_eer=sf.eer if sf else None,
        rf_eer=rf.eer if rf else None,
        tau_sf=sf.threshold if sf else None,
        tau_rf=rf.threshold if rf else None,
        mu_g=_finite(margins.mu_g),
        mu_f=_finite(margins.mu_f),
        delta=_finite(margins.delta),
        per_writer=per_writer,
        scores=ScoreLists(genuine=genuine_scores, skilled=skilled_scores, random=random_scores),
    )


def margin_report(model: SignatureEncoder, dataset: Dataset, step: int = 0) -> MarginReport:
    """Pooled and per-writer genuine/forgery cosine margins of ``dataset``."""
    genuine = {w.writer_id: embed_images(model, w.genuine) for w in dataset.writers}
    forgeries = {w.writer_id: embed_images(model, w.forgeries) for w in dataset.writers}
    stats = margin_stats(genuine, forgeries)
    per_writer = []
    for writer in dataset.writers:
        gg = genuine_pair_cosines(genuine[writer.writer_id])
        gf = forgery_pair_cosines(genuine[writer.writer_id], forgeries[writer.writer_id])
        mu_g = float(gg.mean()) if gg.size else None
        mu_f = float(gf.mean()) if gf.size else None
        per_writer.append(
            WriterResult(
                writer_id=writer.writer_id,
                queries=len(writer.genuine),
                forgeries=len(writer.forgeries),
                mu_g=mu_g,
                mu_f=mu_f,
                delta=mu_g - mu_f if mu_g is not None and mu_f is not None else None,
            )
        )
    return MarginReport(
        split=dataset.split.value,
        step=step,
        mu_g=_finite(stats.mu_g),
        mu_f=_finite(stats.mu_f),
        delta=_finite(stats.delta),
        genuine_pairs=stats.genuine_pairs,
        forgery_pairs=stats.forgery_pairs,
        per_writer=per_writer,
    )
