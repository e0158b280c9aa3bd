"""Root-level pytest configuration and shared fixtures.

Fixtures here are universally applicable across all test modules:
- path fixtures for scratch directories
- factories for signatures, unit embeddings and tiny run configurations
- a mock OutputHandler for command isolation
"""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Any

import numpy as np
import pytest
from pytest_mock import MockerFixture

from src.config.enums import SignatureLabel
from src.config.loader import ConfigLoader
from src.config.models import TrainConfig
from src.signature.models import RawSignature

# Small enough for double-precision forward/backward passes in milliseconds:
# M=16 gives 8x8 images, two stride-2 stages give a 2x2 token grid.
TINY_CONFIG: dict[str, Any] = {
    "M": 16,
    "branch_channels": "4,8",
    "d": 8,
    "heads": 2,
    "self_attn_layers": 1,
    "d_z": 8,
    "ffn_expansion": 2,
    "writers_per_step": 3,
    "extra_genuine": 1,
    "forgeries_per_step": 2,
    "steps": 3,
}


# =============================================================================
# Path Fixtures
# =============================================================================

@pytest.fixture
def tmp_input_dir(tmp_path: Path) -> Path:
    """Create a temporary input directory for test files."""
    input_dir = tmp_path / "input"
    input_dir.mkdir(parents=True, exist_ok=True)
    return input_dir


@pytest.fixture
def tmp_output_dir(tmp_path: Path) -> Path:
    """Create a temporary output directory for written artefacts."""
    output_dir = tmp_path / "output"
    output_dir.mkdir(parents=True, exist_ok=True)
    return output_dir


# =============================================================================
# Data Factories
# =============================================================================

@pytest.fixture
def signature_factory() -> Callable[..., RawSignature]:
    """Factory for smooth synthetic signatures.

    Returns:
        Callable building a RawSignature from a seed; the trace is a
        Lissajous-like curve with positive pressure and 100 Hz timestamps.

    Example:
        >>> sig = signature_factory(n=64, seed=3, writer_id="w007")
    """
    def _create(
        n: int = 64,
        seed: int = 0,
        writer_id: str = "w000",
        label: SignatureLabel = SignatureLabel.GENUINE,
    ) -> RawSignature:
        rng = np.random.default_rng(seed)
        t = np.arange(n) / 100.0
        phase = rng.uniform(0, 2 * np.pi, size=3)
        x = np.sin(2 * np.pi * 0.7 * t + phase[0]) + 2.0 * t
        y = np.cos(2 * np.pi * 1.3 * t + phase[1])
        p = 0.5 + 0.3 * np.sin(2 * np.pi * 0.9 * t + phase[2]) ** 2
        return RawSignature(t=t, x=x, y=y, p=p, writer_id=writer_id, label=label)

    return _create


@pytest.fixture
def unit_vectors() -> Callable[..., np.ndarray]:
    """Factory for (n, d) arrays of random unit-norm rows."""
    def _create(n: int, d: int = 8, seed: int = 0) -> np.ndarray:
        z = np.random.default_rng(seed).normal(size=(n, d))
        return z / np.linalg.norm(z, axis=1, keepdims=True)

    return _create


@pytest.fixture
def tiny_config() -> Callable[..., TrainConfig]:
    """Factory for a desk-sized TrainConfig; keyword overrides use flat keys."""
    def _create(**overrides: Any) -> TrainConfig:
        return ConfigLoader({**TINY_CONFIG, **overrides}).load()

    return _create


# =============================================================================
# Output Handler Fixtures
# =============================================================================

@pytest.fixture
def mock_output_handler(mocker: MockerFixture):
    """Create a mock OutputHandler for dependency injection."""
    handler = mocker.MagicMock()
    handler.info = mocker.MagicMock()
    handler.warning = mocker.MagicMock()
    handler.error = mocker.MagicMock()
    handler.print_config = mocker.MagicMock()
    return handler
