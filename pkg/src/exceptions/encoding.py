"""GAF encoding and binary format exceptions."""

from src.exceptions.base import DataError


class GafEncodingError(DataError):
    """Raised when a series cannot be encoded into a Gramian angular field."""


class OddLengthError(GafEncodingError):
    """Raised when the asymmetric construction receives an odd-length series."""

    def __init__(self, length: int) -> None:
        super().__init__(f"Asymmetric GAF needs an even-length series, got length {length}.")
        self.length = length


class FormatError(DataError):
    """Raised when a binary file (GAF6 stack, GAFW checkpoint) is malformed."""
