"""Fixtures for encoder tests."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

import pytest
import torch

from src.config.models import EncoderConfig

TINY_ENCODER: dict[str, Any] = {
    "input_side": 8,
    "branch_channels": (4, 8),
    "d": 8,
    "heads": 2,
    "self_attn_layers": 1,
    "d_z": 6,
    "ffn_expansion": 2,
}


@pytest.fixture
def encoder_config() -> Callable[..., EncoderConfig]:
    """Factory for small EncoderConfig instances (8x8 input, 2x2 token grid)."""
    def _create(**overrides: Any) -> EncoderConfig:
        return EncoderConfig(**{**TINY_ENCODER, **overrides})

    return _create


@pytest.fixture
def images() -> Callable[..., torch.Tensor]:
    """Factory for random (batch, channels, 8, 8) float64 image batches."""
    def _create(batch: int = 4, channels: int = 6, seed: int = 0) -> torch.Tensor:
        generator = torch.Generator().manual_seed(seed)
        return torch.rand((batch, channels, 8, 8), generator=generator, dtype=torch.float64) * 2 - 1

    return _create
