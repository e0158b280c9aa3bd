"""Dataset and episode sampling exceptions."""

from src.exceptions.base import DataError


class DatasetError(DataError):
    """Raised when a dataset directory or index file is missing or inconsistent."""


class InsufficientDataError(DataError):
    """Raised when a writer (or the dataset) lacks the samples an operation needs.

    Attributes:
        writer_id: Writer the shortage refers to, if any
    """

    def __init__(self, message: str, *, writer_id: str | None = None) -> None:
        super().__init__(message)
        self.writer_id = writer_id
