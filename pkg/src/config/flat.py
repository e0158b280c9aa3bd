"""Flat `key = value` vocabulary shared by config files, CLI flags and checkpoints."""

from collections.abc import Mapping
from enum import Enum
from typing import Any

from src.config.models import TrainConfig

# flat key -> path inside TrainConfig
FLAT_KEYS: dict[str, tuple[str, ...]] = {
    "M": ("encoding", "M"),
    "gaf_variant": ("encoding", "gaf_variant"),
    "channels": ("encoding", "channels"),
    "branch_channels": ("encoder", "branch_channels"),
    "d": ("encoder", "d"),
    "heads": ("encoder", "heads"),
    "self_attn_layers": ("encoder", "self_attn_layers"),
    "d_z": ("encoder", "d_z"),
    "ffn_expansion": ("encoder", "ffn_expansion"),
    "fusion": ("encoder", "fusion"),
    "precision": ("encoder", "precision"),
    "bn_momentum": ("encoder", "bn_momentum"),
    "margin": ("loss", "margin"),
    "lambda_f": ("loss", "lambda_f"),
    "lambda_u": ("loss", "lambda_u"),
    "sample_term": ("loss", "sample_term"),
    "cluster_term": ("loss", "cluster_term"),
    "uniformity_term": ("loss", "uniformity_term"),
    "writers_per_step": ("writers_per_step",),
    "extra_genuine": ("extra_genuine",),
    "forgeries_per_step": ("forgeries_per_step",),
    "steps": ("steps",),
    "learning_rate": ("learning_rate",),
    "optimizer": ("optimizer",),
    "momentum": ("momentum",),
    "seed": ("seed",),
}


def nest(flat: Mapping[str, Any]) -> dict[str, Any]:
    """Turn flat keys into the nested mapping TrainConfig validates.

    The run seed doubles as the encoder initialisation seed and the image side
    always follows M, so neither is a separate key.
    """
    nested: dict[str, Any] = {"encoder": {}, "loss": {}, "encoding": {}}
    for key, value in flat.items():
        path = FLAT_KEYS[key]
        target = nested
        for part in path[:-1]:
            target = target[part]
        target[path[-1]] = value
    if "seed" in flat:
        nested["encoder"]["seed"] = flat["seed"]
    if "M" in flat:
        nested["encoder"]["input_side"] = int(flat["M"]) // 2
    return nested


def format_value(value: Any) -> str:
    """Render a config value the way config files spell it."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, tuple | list):
        return ",".join(format_value(item) for item in value)
    return str(value)


def flatten(config: TrainConfig) -> dict[str, str]:
    """Return every flat key of ``config`` rendered as text, in vocabulary order."""
    flat: dict[str, str] = {}
    for key, path in FLAT_KEYS.items():
        value: Any = config
        for part in path:
            value = getattr(value, part)
        flat[key] = format_value(value)
    return flat
