"""Unit tests for the equal error rate."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.verification.eer import compute_eer, error_rates


def _reference_eer(genuine: list[float], impostor: list[float]) -> float:
    """Sweep written directly against error_rates, one threshold at a time."""
    g, i = np.asarray(genuine), np.asarray(impostor)
    prev_far, prev_frr = 1.0, 0.0
    for tau in sorted(set(genuine) | set(impostor)):
        far, frr = error_rates(g, i, tau)
        if far - frr <= 0:
            if far == frr:
                return far
            alpha = (prev_far - prev_frr) / ((prev_far - prev_frr) - (far - frr))
            return prev_far + alpha * (far - prev_far)
        prev_far, prev_frr = far, frr
    raise AssertionError("sweep never crossed")


scores = st.lists(st.integers(min_value=0, max_value=40).map(lambda v: v / 40), min_size=1, max_size=12)


class TestComputeEer:
    def test_perfect_separation(self) -> None:
        result = compute_eer([0.9, 0.8], [0.1, 0.2])
        assert result.eer == 0.0
        assert result.threshold == pytest.approx(0.2)

    def test_exact_crossing(self) -> None:
        result = compute_eer([0.8, 0.2], [0.7, 0.1])
        assert result.eer == pytest.approx(0.5)
        assert result.threshold == pytest.approx(0.2)

    def test_interpolated_crossing(self) -> None:
        result = compute_eer([0.4, 0.8, 0.9], [0.3, 0.5])
        assert result.eer == pytest.approx(1 / 3)
        assert result.threshold == pytest.approx(0.4 + 0.1 / 3)

    def test_identical_scores(self) -> None:
        result = compute_eer([0.5], [0.5])
        assert result.eer == pytest.approx(0.5)
        assert result.threshold == pytest.approx(0.5)

    def test_fully_inverted(self) -> None:
        assert compute_eer([0.1, 0.2], [0.8, 0.9]).eer == pytest.approx(1.0)

    @pytest.mark.parametrize(("genuine", "impostor"), [([], [0.1]), ([0.1], [])])
    def test_empty_list(self, genuine: list[float], impostor: list[float]) -> None:
        with pytest.raises(ValueError):
            compute_eer(genuine, impostor)

    @given(genuine=scores, impostor=scores)
    @settings(max_examples=200, deadline=None)
    def test_matches_threshold_sweep(self, genuine: list[float], impostor: list[float]) -> None:
        assert compute_eer(genuine, impostor).eer == pytest.approx(_reference_eer(genuine, impostor))

    @given(genuine=scores, impostor=scores)
    @settings(max_examples=100, deadline=None)
    def test_invariant_under_increasing_map(self, genuine: list[float], impostor: list[float]) -> None:
        base = compute_eer(genuine, impostor)
        mapped = compute_eer(np.exp(3 * np.asarray(genuine)), np.exp(3 * np.asarray(impostor)))
        assert mapped.eer == pytest.approx(base.eer)
        assert 0.0 <= base.eer <= 1.0


class TestErrorRates:
    def test_boundaries(self) -> None:
        far, frr = error_rates(np.array([0.5, 0.7]), np.array([0.5, 0.6]), 0.5)
        assert far == 0.5  # impostor strictly above
        assert frr == 0.5  # genuine at the threshold is rejected
