"""Configuration package for GAFSV."""

from src.config.enums import (
    DatasetSplit,
    Decision,
    Fusion,
    GafKind,
    GafVariant,
    KinematicChannel,
    Mode,
    OptimizerKind,
    Precision,
    SignatureLabel,
)
from src.config.models import (
    ALL_CHANNELS,
    EncoderConfig,
    EncodingConfig,
    EvalConfig,
    LossConfig,
    SynthConfig,
    TrainConfig,
)
from src.config.flat import FLAT_KEYS, flatten, nest
from src.config.loader import ConfigLoader

__all__ = [
    # Enums
    "DatasetSplit",
    "Decision",
    "Fusion",
    "GafKind",
    "GafVariant",
    "KinematicChannel",
    "Mode",
    "OptimizerKind",
    "Precision",
    "SignatureLabel",
    # Models
    "ALL_CHANNELS",
    "EncoderConfig",
    "EncodingConfig",
    "EvalConfig",
    "LossConfig",
    "SynthConfig",
    "TrainConfig",
    # Flat vocabulary
    "FLAT_KEYS",
    "flatten",
    "nest",
    # Loader
    "ConfigLoader",
]
