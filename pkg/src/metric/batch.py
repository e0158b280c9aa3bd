"""Episode batches of embeddings with writer and forgery labels."""

from dataclasses import dataclass

import numpy as np
import torch


@dataclass(frozen=True, eq=False)
class EpisodeBatch:
    """Genuine embeddings first, forgery embeddings after.

    Attributes:
        genuine: (N_g, d_z) genuine embeddings
        genuine_labels: Writer label of each genuine row
        forgeries: (B_f, d_z) skilled-forgery embeddings
        forgery_targets: Writer label each forgery imitates
        forgery_labels: Unique label of each forgery, shared with no other sample
    """

    genuine: torch.Tensor
    genuine_labels: tuple[int, ...]
    forgeries: torch.Tensor
    forgery_targets: tuple[int, ...] = ()
    forgery_labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.genuine.ndim != 2 or self.forgeries.ndim != 2:
            raise ValueError("embeddings must be 2-D (rows, d_z)")
        if self.forgeries.shape[0] and self.forgeries.shape[1] != self.genuine.shape[1]:
            raise ValueError("genuine and forgery embeddings differ in width")
        if len(self.genuine_labels) != self.genuine.shape[0]:
            raise ValueError("one writer label per genuine embedding is required")
        n_f = self.forgeries.shape[0]
        if len(self.forgery_targets) != n_f or len(self.forgery_labels) != n_f:
            raise ValueError("every forgery needs a target writer and a unique label")
        if len(set(self.forgery_labels)) != n_f:
            raise ValueError("forgery labels must be unique within the batch")
        if set(self.forgery_labels) & set(self.genuine_labels):
            raise ValueError("forgery labels must differ from every genuine writer label")

    @classmethod
    def genuine_only(cls, genuine: torch.Tensor, labels: tuple[int, ...]) -> "EpisodeBatch":
        return cls(genuine=genuine, genuine_labels=labels, forgeries=genuine.new_zeros((0, genuine.shape[1])))

    @property
    def n_genuine(self) -> int:
        return int(self.genuine.shape[0])

    @property
    def n_forgery(self) -> int:
        return int(self.forgeries.shape[0])

    @property
    def size(self) -> int:
        return self.n_genuine + self.n_forgery

    @property
    def embeddings(self) -> torch.Tensor:
        """All N rows, genuine first."""
        return torch.cat([self.genuine, self.forgeries], dim=0)

    @property
    def labels(self) -> np.ndarray:
        return np.array(self.genuine_labels + self.forgery_labels, dtype=np.int64)
