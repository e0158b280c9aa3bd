"""Synthetic writer populations, written to disk or encoded in memory."""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from src.config.enums import DatasetSplit, Fusion
from src.config.models import EncodingConfig, SynthConfig
from src.signature.models import RawSignature
from src.signature.parser import write_signature
from src.synth.samples import genuine_sample, skilled_forgery
from src.synth.writer import make_writer
from src.training.dataset import (
    Dataset,
    IndexEntry,
    SplitDataset,
    WriterSamples,
    encoder_image,
    write_index,
    write_splits,
)

logger = logging.getLogger(__name__)

SAMPLE_STREAM = 1
SPLIT_STREAM = 2


@dataclass(frozen=True, eq=False)
class SyntheticWriter:
    writer_id: str
    genuine: tuple[RawSignature, ...]
    forgeries: tuple[RawSignature, ...]


def writer_id_for(index: int) -> str:
    return f"w{index:03d}"


def generate_writer(config: SynthConfig, index: int) -> SyntheticWriter:
    """All samples of writer ``index``; depends only on (config, index)."""
    writer_id = writer_id_for(index)
    params = make_writer([config.seed, index])
    rng = np.random.default_rng([config.seed, index, SAMPLE_STREAM])
    genuine = tuple(genuine_sample(params, rng, writer_id) for _ in range(config.genuine))
    forgeries = tuple(
        skilled_forgery(params, rng, writer_id, warp_amplitude=config.warp_amplitude)
        for _ in range(config.forgeries)
    )
    return SyntheticWriter(writer_id=writer_id, genuine=genuine, forgeries=forgeries)


def generate_writers(config: SynthConfig, jobs: int = 1) -> list[SyntheticWriter]:
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(lambda i: generate_writer(config, i), range(config.writers)))


def split_writers(writer_ids: list[str], seed: int, train_fraction: float) -> dict[str, DatasetSplit]:
    """Seed-shuffled writer-independent split; at least one writer on each side when n >= 2."""
    n = len(writer_ids)
    n_train = max(1, min(n - 1, round(train_fraction * n)))
    order = np.random.default_rng([seed, SPLIT_STREAM]).permutation(n)
    train = {writer_ids[int(i)] for i in order[:n_train]}
    return {w: DatasetSplit.TRAIN if w in train else DatasetSplit.EVAL for w in writer_ids}


def write_dataset(dataset_dir: Path, config: SynthConfig, jobs: int = 1) -> dict[str, DatasetSplit]:
    """Write signature files, ``dataset.tsv`` and ``splits.tsv`` under ``dataset_dir``."""
    writers = generate_writers(config, jobs)
    entries: list[IndexEntry] = []
    for writer in writers:
        for kind, samples in (("genuine", writer.genuine), ("skilled", writer.forgeries)):
            for i, sig in enumerate(samples):
                relative = f"{writer.writer_id}/{kind}_{i:02d}.txt"
                write_signature(dataset_dir / relative, sig)
                entries.append(IndexEntry(writer.writer_id, sig.label, relative))
    write_index(dataset_dir, entries)
    splits = split_writers([w.writer_id for w in writers], config.seed, config.train_fraction)
    write_splits(dataset_dir, splits)
    logger.info(f"Wrote {len(entries)} signatures for {len(writers)} writers to {dataset_dir}")
    return splits


def make_dataset(
    config: SynthConfig,
    encoding: EncodingConfig | None = None,
    fusion: Fusion = Fusion.CROSS_ATTENTION,
    jobs: int = 1,
) -> SplitDataset:
    """Generate and encode a population in memory (no files)."""
    encoding = encoding or EncodingConfig(M=config.M)
    writers = generate_writers(config, jobs)
    splits = split_writers([w.writer_id for w in writers], config.seed, config.train_fraction)

    def encode(writer: SyntheticWriter) -> WriterSamples:
        return WriterSamples(
            writer_id=writer.writer_id,
            genuine=tuple(encoder_image(sig, encoding, fusion) for sig in writer.genuine),
            forgeries=tuple(encoder_image(sig, encoding, fusion) for sig in writer.forgeries),
        )

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        encoded = list(pool.map(encode, writers))

    def build(split: DatasetSplit) -> Dataset:
        return Dataset(writers=tuple(w for w in encoded if splits[w.writer_id] is split), split=split)

    return SplitDataset(train=build(DatasetSplit.TRAIN), eval=build(DatasetSplit.EVAL))
