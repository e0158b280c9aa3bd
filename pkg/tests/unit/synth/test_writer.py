"""Unit tests for synthetic writer parameters."""

from __future__ import annotations

import numpy as np
import pytest

from src.synth.writer import (
    AMPLITUDE_RANGE,
    DURATION_RANGE,
    FREQUENCY_RANGE,
    SAMPLE_RATES,
    SinusoidBank,
    make_writer,
)


class TestMakeWriter:
    def test_deterministic(self) -> None:
        a, b = make_writer([7, 3]), make_writer([7, 3])
        np.testing.assert_array_equal(a.x.frequencies, b.x.frequencies)
        np.testing.assert_array_equal(a.pressure.centers, b.pressure.centers)
        assert (a.duration, a.rate, a.drift) == (b.duration, b.rate, b.drift)

    def test_seeds_differ(self) -> None:
        assert not np.array_equal(make_writer(1).x.phases, make_writer(2).x.phases)

    @pytest.mark.parametrize("seed", range(5))
    def test_ranges(self, seed: int) -> None:
        writer = make_writer(seed)
        for bank in (writer.x, writer.y):
            assert np.all((bank.amplitudes >= AMPLITUDE_RANGE[0]) & (bank.amplitudes <= AMPLITUDE_RANGE[1]))
            assert np.all((bank.frequencies >= FREQUENCY_RANGE[0]) & (bank.frequencies <= FREQUENCY_RANGE[1]))
        assert DURATION_RANGE[0] <= writer.duration <= DURATION_RANGE[1]
        assert writer.rate in SAMPLE_RATES
        assert writer.n_samples == round(writer.duration * writer.rate)


class TestSinusoidBank:
    def test_evaluation(self) -> None:
        bank = SinusoidBank(
            amplitudes=np.array([1.0, 2.0]),
            frequencies=np.array([1.0, 0.5]),
            phases=np.array([0.0, np.pi / 2]),
        )
        # at t = 0.25: sin(pi / 2) + 2 sin(pi / 4 + pi / 2)
        expected = 1.0 + 2.0 * np.sin(3 * np.pi / 4)
        np.testing.assert_allclose(bank(np.array([0.25])), [expected])

    def test_needs_two_components(self) -> None:
        with pytest.raises(ValueError):
            SinusoidBank(amplitudes=np.ones(1), frequencies=np.ones(1), phases=np.zeros(1))

    def test_positive_frequencies(self) -> None:
        with pytest.raises(ValueError, match="positive"):
            SinusoidBank(amplitudes=np.ones(2), frequencies=np.array([1.0, 0.0]), phases=np.zeros(2))
