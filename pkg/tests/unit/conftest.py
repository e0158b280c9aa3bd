"""Unit test shared fixtures.

Fixtures here are available to all unit tests but not integration tests.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest
import torch

from src.config.enums import DatasetSplit
from src.metric.batch import EpisodeBatch
from src.training.dataset import Dataset, WriterSamples


def pytest_collection_modifyitems(items):
    """Automatically mark all tests in unit/ directory with @pytest.mark.unit."""
    for item in items:
        if "/unit/" in str(item.fspath):
            item.add_marker(pytest.mark.unit)


@pytest.fixture
def episode_batch() -> Callable[..., EpisodeBatch]:
    """Factory building an EpisodeBatch from plain lists of 2-D (or wider) vectors.

    Example:
        >>> batch = episode_batch([[1, 0], [0.8, 0.6]], [0, 0])
    """
    def _create(
        genuine: list[list[float]],
        labels: list[int],
        forgeries: list[list[float]] | None = None,
        targets: list[int] | None = None,
    ) -> EpisodeBatch:
        g = torch.tensor(genuine, dtype=torch.float64)
        if not forgeries:
            return EpisodeBatch.genuine_only(g, tuple(labels))
        f = torch.tensor(forgeries, dtype=torch.float64)
        first_free = max(labels) + 1
        return EpisodeBatch(
            genuine=g,
            genuine_labels=tuple(labels),
            forgeries=f,
            forgery_targets=tuple(targets or []),
            forgery_labels=tuple(range(first_free, first_free + len(forgeries))),
        )

    return _create


@pytest.fixture
def toy_dataset() -> Callable[..., Dataset]:
    """Factory for in-memory datasets of random (6, 8, 8) images in [-1, 1].

    Each writer's images are a shared writer pattern plus noise, so the
    encoder sees some structure.
    """
    def _create(
        writers: int = 4,
        genuine: int = 3,
        forgeries: int = 2,
        seed: int = 0,
    ) -> Dataset:
        rng = np.random.default_rng(seed)
        samples = []
        for w in range(writers):
            pattern = rng.uniform(-0.8, 0.8, size=(6, 8, 8))

            def draw(scale: float) -> np.ndarray:
                return np.clip(pattern + rng.normal(scale=scale, size=pattern.shape), -1, 1)

            samples.append(
                WriterSamples(
                    writer_id=f"w{w:03d}",
                    genuine=tuple(draw(0.05) for _ in range(genuine)),
                    forgeries=tuple(draw(0.3) for _ in range(forgeries)),
                )
            )
        return Dataset(writers=tuple(samples), split=DatasetSplit.TRAIN)

    return _create
