"""Optimisation loop: episode forward pass, frozen-mining loss, gradient update."""

import logging
from dataclasses import dataclass
from pathlib import Path

import torch

from src.config.enums import OptimizerKind
from src.config.flat import flatten
from src.config.kv_source import render_key_values
from src.config.models import LossConfig, TrainConfig
from src.exceptions import ConfigError
from src.metric.batch import EpisodeBatch
from src.metric.losses import LossBreakdown, total_loss
from src.metric.mining import MiningReport, mine_triplets
from src.model.checkpoint import Checkpoint, write_checkpoint
from src.model.encoder import SignatureEncoder, build_encoder, images_to_tensor
from src.model.gradients import grad
from src.output.metrics_csv import MetricsCsvWriter
from src.training.dataset import Dataset
from src.training.sampler import EpisodeIndices, sample_episode, sampling_rng

logger = logging.getLogger(__name__)

CHECKPOINT_FILE = "model.gafw"
METRICS_FILE = "metrics.csv"
CONFIG_FILE = "config.conf"


@dataclass(frozen=True)
class StepResult:
    step: int
    loss: LossBreakdown
    report: MiningReport


@dataclass(frozen=True)
class TrainingRun:
    model: SignatureEncoder
    steps_completed: int
    checkpoint_path: Path
    metrics_path: Path
    config_path: Path


def make_optimizer(model: SignatureEncoder, config: TrainConfig) -> torch.optim.Optimizer:
    params = list(model.parameters())
    match config.optimizer:
        case OptimizerKind.SGD:
            return torch.optim.SGD(params, lr=config.learning_rate)
        case OptimizerKind.SGD_MOMENTUM:
            return torch.optim.SGD(params, lr=config.learning_rate, momentum=config.momentum)
        case OptimizerKind.ADAM:
            return torch.optim.Adam(params, lr=config.learning_rate)


def episode_images(dataset: Dataset, indices: EpisodeIndices, dtype: torch.dtype) -> torch.Tensor:
    """Genuine images followed by forgery images as one batch tensor."""
    images = [dataset.writers[w].genuine[i] for w, i in indices.genuine]
    images += [dataset.writers[w].forgeries[k] for w, k in indices.forgeries]
    return images_to_tensor(images, dtype)


class EpisodeObjective:
    """Total loss of one episode as a closure over the model parameters.

    Triplets are mined on the first call and reused on later calls, so repeated
    evaluations (finite differences, optimiser closures) see one fixed objective.
    The latest breakdown is kept in ``loss``.
    """

    def __init__(
        self,
        model: SignatureEncoder,
        images: torch.Tensor,
        indices: EpisodeIndices,
        loss_config: LossConfig,
    ) -> None:
        self.model = model
        self.images = images
        self.indices = indices
        self.loss_config = loss_config
        self.report: MiningReport | None = None
        self.loss: LossBreakdown | None = None

    def __call__(self) -> torch.Tensor:
        self.model.train()
        z = self.model(self.images)
        n_g = len(self.indices.genuine)
        batch = EpisodeBatch(
            genuine=z[:n_g],
            genuine_labels=self.indices.genuine_labels,
            forgeries=z[n_g:],
            forgery_targets=self.indices.forgery_targets,
            forgery_labels=self.indices.forgery_labels,
        )
        if self.report is None:
            self.report = mine_triplets(batch, self.loss_config.margin)
        self.loss = total_loss(batch, self.loss_config, self.report)
        return self.loss.total


def train_step(
    model: SignatureEncoder,
    optimizer: torch.optim.Optimizer,
    images: torch.Tensor,
    indices: EpisodeIndices,
    config: TrainConfig,
    step: int = 0,
) -> StepResult:
    """One update. Triplets are mined on the first forward pass and then held fixed.

    Raises:
        NonFiniteLossError: If the loss is NaN or infinite (parameters untouched)
    """
    objective = EpisodeObjective(model, images, indices, config.loss)
    _, grads = grad(model, objective)
    for name, param in model.named_parameters():
        param.grad = grads[name]
    optimizer.step()

    loss, report = objective.loss, objective.report
    assert loss is not None and report is not None
    total, sample, cluster, unif = loss.as_row()
    logger.debug(
        f"step {step}: total={total:.6f} sample={sample:.6f} cluster={cluster:.6f} "
        f"unif={unif:.6f} semi_hard={report.semi_hard_fraction:.2f}"
    )
    return StepResult(step=step, loss=loss, report=report)


def train_loop(
    dataset: Dataset,
    config: TrainConfig,
    out_dir: Path,
    resume: Checkpoint | None = None,
) -> TrainingRun:
    """Run ``config.steps`` steps and write the checkpoint, metrics and config files.

    When resuming, the step counter and the per-step sampling stream continue
    from the checkpoint; optimiser state is not stored, so only stateless
    optimisers (plain SGD) resume exactly.
    """
    if resume is not None:
        if resume.config.encoder != config.encoder:
            raise ConfigError("checkpoint encoder configuration differs from the requested run")
        model = resume.restore()
        start = resume.step
        logger.info(f"Resuming from step {start}")
    else:
        model = build_encoder(config.encoder)
        start = 0

    optimizer = make_optimizer(model, config)
    out_dir.mkdir(parents=True, exist_ok=True)
    metrics_path = out_dir / METRICS_FILE
    with MetricsCsvWriter(metrics_path) as metrics:
        for step in range(start, start + config.steps):
            indices = sample_episode(dataset, config, sampling_rng(config.seed, step))
            images = episode_images(dataset, indices, model.dtype)
            result = train_step(model, optimizer, images, indices, config, step=step + 1)
            metrics.write_row(step + 1, result.loss)

    completed = start + config.steps
    checkpoint_path = out_dir / CHECKPOINT_FILE
    write_checkpoint(checkpoint_path, model, config, step=completed)
    config_path = out_dir / CONFIG_FILE
    config_path.write_text(render_key_values(flatten(config)), encoding="utf-8")
    logger.info(f"Trained {config.steps} steps; checkpoint at {checkpoint_path}")
    return TrainingRun(
        model=model,
        steps_completed=completed,
        checkpoint_path=checkpoint_path,
        metrics_path=metrics_path,
        config_path=config_path,
    )
