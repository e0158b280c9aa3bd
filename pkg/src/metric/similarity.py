import torch

from src.exceptions import NonUnitEmbeddingError

UNIT_TOLERANCE = 1e-6


def cosine_matrix(embeddings: torch.Tensor, tolerance: float = UNIT_TOLERANCE) -> torch.Tensor:
    """Pairwise cosines of unit-norm rows, clamped to [-1, 1].

    Raises:
        NonUnitEmbeddingError: If any row norm differs from 1 by more than ``tolerance``
    """
    norms = torch.linalg.vector_norm(embeddings.detach(), dim=-1)
    if norms.numel() and float((norms - 1).abs().max()) > tolerance:
        raise NonUnitEmbeddingError(f"embeddings must be unit-norm (max deviation {float((norms - 1).abs().max()):.2e})")
    return torch.clamp(embeddings @ embeddings.T, -1.0, 1.0)
