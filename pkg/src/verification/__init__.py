"""Prototype scoring, EER and margin diagnostics."""

from src.verification.prototype import Prototype, decide, enroll, score
from src.verification.eer import EerResult, compute_eer, error_rates
from src.verification.margins import MarginStats, margin_stats
from src.verification.report import EvalReport, MarginReport, ScoreLists, WriterResult
from src.verification.evaluate import embed_images, evaluate, margin_report

__all__ = [
    "Prototype",
    "decide",
    "enroll",
    "score",
    "EerResult",
    "compute_eer",
    "error_rates",
    "MarginStats",
    "margin_stats",
    "EvalReport",
    "MarginReport",
    "ScoreLists",
    "WriterResult",
    "embed_images",
    "evaluate",
    "margin_report",
]
