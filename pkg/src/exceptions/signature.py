"""Signature parsing and kinematic extraction exceptions."""

from src.exceptions.base import DataError


class SignatureParseError(DataError):
    """Raised when a signature document does not follow the text format.

    Attributes:
        line: 1-based line number the error refers to (0 when the error
            concerns the document as a whole)
        reason: Short machine-friendly reason keyword
    """

    reason: str = "malformed"

    def __init__(self, line: int, detail: str) -> None:
        location = f"line {line}" if line else "document"
        super().__init__(f"{location}: {self.reason}: {detail}")
        self.line = line
        self.detail = detail


class MalformedLineError(SignatureParseError):
    """Raised for a header or sample line that cannot be parsed."""

    reason = "malformed"


class TimestampOrderError(SignatureParseError):
    """Raised when timestamps are not strictly increasing."""

    reason = "timestamps"


class TooFewSamplesError(SignatureParseError):
    """Raised when a document holds fewer than the minimum number of samples."""

    reason = "too few samples"


class DegenerateStepError(DataError):
    """Raised when a finite-difference step has zero (or negative) duration."""

    def __init__(self, index: int) -> None:
        super().__init__(
            f"Degenerate time step between samples {index} and {index + 1}; "
            "timestamps must be strictly increasing."
        )
        self.index = index
