"""Datasets, episode sampling and the training loop."""

from src.training.dataset import (
    INDEX_FILE,
    SPLITS_FILE,
    Dataset,
    IndexEntry,
    SplitDataset,
    WriterSamples,
    encoder_image,
    load_dataset,
    read_index,
    read_splits,
    write_index,
    write_splits,
)
from src.training.sampler import EpisodeIndices, check_trainable, sample_episode, sampling_rng
from src.training.trainer import (
    StepResult,
    TrainingRun,
    episode_images,
    make_optimizer,
    train_loop,
    train_step,
)

__all__ = [
    "INDEX_FILE",
    "SPLITS_FILE",
    "Dataset",
    "IndexEntry",
    "SplitDataset",
    "WriterSamples",
    "encoder_image",
    "load_dataset",
    "read_index",
    "read_splits",
    "write_index",
    "write_splits",
    "EpisodeIndices",
    "check_trainable",
    "sample_episode",
    "sampling_rng",
    "StepResult",
    "TrainingRun",
    "episode_images",
    "make_optimizer",
    "train_loop",
    "train_step",
]
