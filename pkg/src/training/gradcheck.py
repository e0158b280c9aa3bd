"""Finite-difference validation of the full training objective on a small episode."""

import logging
from dataclasses import dataclass

from src.config.enums import DatasetSplit
from src.config.models import SynthConfig, TrainConfig
from src.exceptions import GradientCheckError
from src.model.encoder import build_encoder
from src.model.gradients import finite_difference_check
from src.synth.dataset import make_dataset
from src.training.dataset import Dataset
from src.training.sampler import sample_episode, sampling_rng
from src.training.trainer import EpisodeObjective, episode_images

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-4
CHECK_WRITERS = 3
CHECK_FORGERIES = 2


@dataclass(frozen=True)
class GradientCheckResult:
    max_relative_error: float
    coordinates: int
    step: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_relative_error < self.tolerance


def gradient_check(
    config: TrainConfig,
    coordinates: int = 200,
    step: float = 1e-5,
    tolerance: float = DEFAULT_TOLERANCE,
    raise_on_failure: bool = True,
) -> GradientCheckResult:
    """Compare autograd and central differences for ``config``'s encoder and loss.

    The episode is kept small (three writers, two genuines each, two
    forgeries) and mining is frozen after the first forward pass.

    Raises:
        GradientCheckError: If the worst relative error reaches ``tolerance``
    """
    episode_config = config.model_copy(
        update={"writers_per_step": CHECK_WRITERS, "extra_genuine": 1, "forgeries_per_step": CHECK_FORGERIES}
    )
    synth = SynthConfig(writers=CHECK_WRITERS, genuine=2, forgeries=1, seed=config.seed, M=config.encoding.M)
    data = make_dataset(synth, config.encoding, config.encoder.fusion)
    dataset = Dataset(writers=data.train.writers + data.eval.writers, split=DatasetSplit.TRAIN)
    indices = sample_episode(dataset, episode_config, sampling_rng(config.seed, 0))

    model = build_encoder(config.encoder)
    images = episode_images(dataset, indices, model.dtype)
    objective = EpisodeObjective(model, images, indices, config.loss)
    worst = finite_difference_check(model, objective, coordinates=coordinates, step=step, seed=config.seed)
    logger.info(f"Gradient check: max relative error {worst:.3e} over {coordinates} coordinates")
    result = GradientCheckResult(max_relative_error=worst, coordinates=coordinates, step=step, tolerance=tolerance)
    if raise_on_failure and not result.passed:
        raise GradientCheckError(worst, tolerance)
    return result
