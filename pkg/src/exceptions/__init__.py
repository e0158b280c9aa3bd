"""Exception hierarchy for GAFSV."""
from src.exceptions.base import GafsvError, ConfigError, DataError, NumericError
from src.exceptions.config import (
    ConfigValidationError,
    UnknownConfigKeyError,
    ConfigFileError,
)
from src.exceptions.signature import (
    SignatureParseError,
    MalformedLineError,
    TimestampOrderError,
    TooFewSamplesError,
    DegenerateStepError,
)
from src.exceptions.encoding import GafEncodingError, OddLengthError, FormatError
from src.exceptions.model import (
    ShapeMismatchError,
    DegenerateEmbeddingError,
    NonFiniteLossError,
    GradientCheckError,
    NonUnitEmbeddingError,
)
from src.exceptions.data import DatasetError, InsufficientDataError

__all__ = [
    "GafsvError",
    "ConfigError",
    "DataError",
    "NumericError",
    "ConfigValidationError",
    "UnknownConfigKeyError",
    "ConfigFileError",
    "SignatureParseError",
    "MalformedLineError",
    "TimestampOrderError",
    "TooFewSamplesError",
    "DegenerateStepError",
    "GafEncodingError",
    "OddLengthError",
    "FormatError",
    "ShapeMismatchError",
    "DegenerateEmbeddingError",
    "NonFiniteLossError",
    "GradientCheckError",
    "NonUnitEmbeddingError",
    "DatasetError",
    "InsufficientDataError",
]
