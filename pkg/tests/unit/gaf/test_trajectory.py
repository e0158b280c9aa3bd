"""Unit tests for the binary pen-path raster."""

from __future__ import annotations

import numpy as np
import pytest

from src.config.enums import SignatureLabel
from src.gaf.trajectory import rasterize_trajectory
from src.signature.models import RawSignature


def _trace(x: np.ndarray, y: np.ndarray) -> RawSignature:
    t = np.arange(x.shape[0]) * 0.01
    return RawSignature(t=t, x=x, y=y, p=np.ones_like(t), writer_id="w000", label=SignatureLabel.GENUINE)


class TestRasterizeTrajectory:
    """Tests for rasterize_trajectory."""

    def test_binary_output(self, signature_factory) -> None:
        image = rasterize_trajectory(signature_factory(), 32)
        assert image.shape == (32, 32)
        assert image.dtype == np.uint8
        assert set(np.unique(image)) <= {0, 1}

    def test_one_pixel_margin(self, signature_factory) -> None:
        image = rasterize_trajectory(signature_factory(n=200, seed=2), 16)
        assert not image[0].any() and not image[-1].any()
        assert not image[:, 0].any() and not image[:, -1].any()

    def test_horizontal_stroke(self) -> None:
        side = 16
        image = rasterize_trajectory(_trace(np.linspace(0, 5, 9), np.zeros(9)), side)
        assert int(image.sum()) == side - 2
        np.testing.assert_array_equal(image[side // 2, 1 : side - 1], 1)

    def test_diagonal_stroke_matches_discrete_line(self) -> None:
        side = 12
        steps = side - 3
        u = np.arange(steps + 1) / steps
        image = rasterize_trajectory(_trace(u, u), side)
        assert int(image.sum()) == side - 2
        # y points up, so the rising diagonal runs from bottom-left to top-right
        for i in range(side - 2):
            assert image[side - 2 - i, 1 + i] == 1

    def test_degenerate_trace_is_centre_pixel(self) -> None:
        image = rasterize_trajectory(_trace(np.ones(5), np.ones(5)), 8)
        assert int(image.sum()) == 1
        assert image[4, 4] == 1

    def test_minimum_side(self, signature_factory) -> None:
        with pytest.raises(ValueError):
            rasterize_trajectory(signature_factory(), 4)
