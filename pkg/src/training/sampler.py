"""Writer-episodic batch sampling."""

import logging
from dataclasses import dataclass

import numpy as np

from src.config.models import TrainConfig
from src.exceptions import InsufficientDataError
from src.training.dataset import Dataset

logger = logging.getLogger(__name__)

SAMPLING_STREAM = 1


@dataclass(frozen=True)
class EpisodeIndices:
    """Dataset positions of one episode's images.

    Genuine entries are grouped by writer; writer labels are episode-local
    (0..W_b-1) and forgery labels continue from W_b so they never collide.

    Attributes:
        genuine: (writer index, sample index) per genuine image
        genuine_labels: Episode-local writer label per genuine image
        forgeries: (writer index, forgery index) per forgery image
        forgery_targets: Episode-local label of the writer each forgery imitates
        forgery_labels: Unique label per forgery
    """

    genuine: tuple[tuple[int, int], ...]
    genuine_labels: tuple[int, ...]
    forgeries: tuple[tuple[int, int], ...] = ()
    forgery_targets: tuple[int, ...] = ()
    forgery_labels: tuple[int, ...] = ()

    @property
    def writers(self) -> tuple[int, ...]:
        """Dataset indices of the sampled writers, in label order."""
        return tuple(dict.fromkeys(w for w, _ in self.genuine))


def sampling_rng(seed: int, step: int) -> np.random.Generator:
    """Per-step generator of the sampling stream; independent of the initialisation stream."""
    return np.random.default_rng([seed, SAMPLING_STREAM, step])


def check_trainable(dataset: Dataset, config: TrainConfig) -> None:
    """Raise InsufficientDataError unless every writer can fill its episode slots."""
    if len(dataset) < config.writers_per_step:
        raise InsufficientDataError(
            f"{config.writers_per_step} writers per step requested, dataset has {len(dataset)}"
        )
    needed = config.extra_genuine + 1
    for writer in dataset.writers:
        if len(writer.genuine) < needed:
            raise InsufficientDataError(
                f"writer {writer.writer_id} has {len(writer.genuine)} genuine samples, {needed} needed",
                writer_id=writer.writer_id,
            )


def sample_episode(dataset: Dataset, config: TrainConfig, rng: np.random.Generator) -> EpisodeIndices:
    """Draw W_b distinct writers, R+1 genuines each and B_f forgeries targeting them.

    Forgeries come uniformly from the sampled writers' pooled skilled forgeries,
    without replacement when the pool is large enough.

    Raises:
        InsufficientDataError: Too few writers or genuines, or no forgeries when B_f > 0
    """
    check_trainable(dataset, config)
    chosen = rng.choice(len(dataset), size=config.writers_per_step, replace=False)

    genuine: list[tuple[int, int]] = []
    labels: list[int] = []
    pool: list[tuple[int, int, int]] = []
    for label, writer_index in enumerate(int(w) for w in chosen):
        writer = dataset.writers[writer_index]
        picks = rng.choice(len(writer.genuine), size=config.extra_genuine + 1, replace=False)
        genuine.extend((writer_index, int(i)) for i in picks)
        labels.extend([label] * len(picks))
        pool.extend((label, writer_index, k) for k in range(len(writer.forgeries)))

    n_f = config.forgeries_per_step
    if n_f == 0:
        return EpisodeIndices(genuine=tuple(genuine), genuine_labels=tuple(labels))
    if not pool:
        names = ", ".join(dataset.writers[int(w)].writer_id for w in chosen)
        raise InsufficientDataError(f"no skilled forgeries available for sampled writers {names}")

    drawn = rng.choice(len(pool), size=n_f, replace=len(pool) < n_f)
    forgeries = [pool[int(i)] for i in drawn]
    return EpisodeIndices(
        genuine=tuple(genuine),
        genuine_labels=tuple(labels),
        forgeries=tuple((w, k) for _, w, k in forgeries),
        forgery_targets=tuple(label for label, _, _ in forgeries),
        forgery_labels=tuple(config.writers_per_step + k for k in range(n_f)),
    )
