"""Dataset directories: index files, splits and encoded writer samples."""

import csv
import logging
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from src.config.enums import DatasetSplit, Fusion, SignatureLabel
from src.config.models import EncodingConfig
from src.exceptions import DatasetError, SignatureParseError
from src.gaf.construction import encode_signature
from src.gaf.trajectory import rasterize_trajectory
from src.signature.models import RawSignature
from src.signature.parser import read_signature

logger = logging.getLogger(__name__)

INDEX_FILE = "dataset.tsv"
SPLITS_FILE = "splits.tsv"


@dataclass(frozen=True)
class IndexEntry:
    """One row of ``dataset.tsv``; ``path`` is relative to the dataset directory."""

    writer_id: str
    label: SignatureLabel
    path: str


@dataclass(frozen=True, eq=False)
class WriterSamples:
    """Encoder images of one writer in file order."""

    writer_id: str
    genuine: tuple[np.ndarray, ...]
    forgeries: tuple[np.ndarray, ...] = ()


@dataclass(frozen=True, eq=False)
class Dataset:
    """Writers of one split; every forgery is stored under the writer it imitates."""

    writers: tuple[WriterSamples, ...]
    split: DatasetSplit

    def __len__(self) -> int:
        return len(self.writers)

    @property
    def writer_ids(self) -> tuple[str, ...]:
        return tuple(w.writer_id for w in self.writers)


@dataclass(frozen=True, eq=False)
class SplitDataset:
    train: Dataset
    eval: Dataset

    def __post_init__(self) -> None:
        shared = set(self.train.writer_ids) & set(self.eval.writer_ids)
        if shared:
            raise DatasetError(f"writers present in both splits: {sorted(shared)}")


def _tsv_rows(path: Path) -> list[list[str]]:
    try:
        with path.open(encoding="utf-8", newline="") as f:
            return list(csv.reader(f, delimiter="\t"))
    except UnicodeDecodeError as e:
        raise DatasetError(f"{path}: not valid UTF-8 (byte {e.start})") from e


def write_index(dataset_dir: Path, entries: Iterable[IndexEntry]) -> None:
    with (dataset_dir / INDEX_FILE).open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, delimiter="\t", lineterminator="\n")
        for entry in entries:
            writer.writerow([entry.writer_id, entry.label.value, entry.path])


def read_index(dataset_dir: Path) -> list[IndexEntry]:
    """Parse ``dataset.tsv``.

    Raises:
        DatasetError: Missing file, wrong column count or unknown label
    """
    path = dataset_dir / INDEX_FILE
    if not path.is_file():
        raise DatasetError(f"dataset index not found: {path}")
    entries = []
    for line_number, row in enumerate(_tsv_rows(path), start=1):
        if not row:
            continue
        if len(row) != 3:
            raise DatasetError(f"{path}:{line_number}: expected 3 tab-separated columns, got {len(row)}")
        writer_id, label, relative = row
        try:
            entries.append(IndexEntry(writer_id, SignatureLabel(label), relative))
        except ValueError as e:
            raise DatasetError(f"{path}:{line_number}: unknown label {label!r}") from e
    return entries


def write_splits(dataset_dir: Path, splits: dict[str, DatasetSplit]) -> None:
    with (dataset_dir / SPLITS_FILE).open("w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, delimiter="\t", lineterminator="\n")
        for writer_id, split in splits.items():
            writer.writerow([writer_id, split.value])


def read_splits(dataset_dir: Path) -> dict[str, DatasetSplit]:
    path = dataset_dir / SPLITS_FILE
    if not path.is_file():
        raise DatasetError(f"split file not found: {path}")
    splits: dict[str, DatasetSplit] = {}
    for line_number, row in enumerate(_tsv_rows(path), start=1):
        if not row:
            continue
        if len(row) != 2:
            raise DatasetError(f"{path}:{line_number}: expected writer_id and split")
        try:
            splits[row[0]] = DatasetSplit(row[1])
        except ValueError as e:
            raise DatasetError(f"{path}:{line_number}: unknown split {row[1]!r}") from e
    return splits


def encoder_image(sig: RawSignature, encoding: EncodingConfig, fusion: Fusion) -> np.ndarray:
    """The (C, H, H) array the encoder consumes for ``fusion``."""
    if fusion.uses_trajectory:
        return rasterize_trajectory(sig, encoding.side).astype(np.float64)[np.newaxis]
    return np.asarray(encode_signature(sig, encoding).channels)


def load_dataset(
    dataset_dir: Path,
    encoding: EncodingConfig,
    fusion: Fusion = Fusion.CROSS_ATTENTION,
    jobs: int = 1,
) -> SplitDataset:
    """Read and encode every indexed signature, grouped by writer and split.

    Rows labelled ``random`` are ignored; random-impostor queries are drawn
    from other writers' genuines at evaluation time.

    Raises:
        DatasetError: Inconsistent index/split files or unreadable signatures
    """
    entries = [e for e in read_index(dataset_dir) if e.label is not SignatureLabel.RANDOM_IMPOSTOR]
    splits = read_splits(dataset_dir)
    unknown = {e.writer_id for e in entries} - set(splits)
    if unknown:
        raise DatasetError(f"writers missing from {SPLITS_FILE}: {sorted(unknown)}")

    def encode(entry: IndexEntry) -> np.ndarray:
        path = dataset_dir / entry.path
        try:
            sig = read_signature(path)
        except (OSError, ValueError, SignatureParseError) as e:
            raise DatasetError(f"cannot load {path}: {e}") from e
        if sig.writer_id != entry.writer_id or sig.label is not entry.label:
            raise DatasetError(
                f"{path} header says {sig.writer_id}/{sig.label.value}, "
                f"index says {entry.writer_id}/{entry.label.value}"
            )
        return encoder_image(sig, encoding, fusion)

    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        images = list(pool.map(encode, entries))
    logger.info(f"Encoded {len(images)} signatures from {dataset_dir}")

    grouped: dict[str, dict[SignatureLabel, list[np.ndarray]]] = {}
    for entry, image in zip(entries, images):
        grouped.setdefault(entry.writer_id, {SignatureLabel.GENUINE: [], SignatureLabel.SKILLED_FORGERY: []})
        grouped[entry.writer_id][entry.label].append(image)

    def build(split: DatasetSplit) -> Dataset:
        writers = tuple(
            WriterSamples(
                writer_id=writer_id,
                genuine=tuple(samples[SignatureLabel.GENUINE]),
                forgeries=tuple(samples[SignatureLabel.SKILLED_FORGERY]),
            )
            for writer_id, samples in grouped.items()
            if splits[writer_id] is split
        )
        return Dataset(writers=writers, split=split)

    return SplitDataset(train=build(DatasetSplit.TRAIN), eval=build(DatasetSplit.EVAL))
