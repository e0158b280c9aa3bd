"""Per-step loss log written as CSV."""

import csv
from pathlib import Path
from types import TracebackType
from typing import Any, TextIO

from src.metric.losses import LossBreakdown

METRICS_HEADER = ("step", "loss_total", "loss_tri_sample", "loss_tri_cluster", "loss_unif")


class MetricsCsvWriter:
    """Context manager writing one header line then one row per training step."""

    def __init__(self, path: Path) -> None:
        self._path = path
        self._file: TextIO | None = None
        self._writer: Any = None
        self.rows = 0

    def __enter__(self) -> "MetricsCsvWriter":
        self._path.parent.mkdir(parents=True, exist_ok=True)
        self._file = self._path.open("w", encoding="utf-8", newline="")
        self._writer = csv.writer(self._file, lineterminator="\n")
        self._writer.writerow(METRICS_HEADER)
        return self

    def write_row(self, step: int, loss: LossBreakdown) -> None:
        if self._writer is None:
            raise RuntimeError("MetricsCsvWriter used outside its context")
        self._writer.writerow([step, *(repr(value) for value in loss.as_row())])
        self.rows += 1

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None
            self._writer = None


def read_metrics(path: Path) -> list[dict[str, float]]:
    """Rows of a metrics file keyed by column name."""
    with path.open(encoding="utf-8", newline="") as f:
        return [{key: float(value) for key, value in row.items()} for row in csv.DictReader(f)]
