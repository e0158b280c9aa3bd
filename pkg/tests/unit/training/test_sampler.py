"""Unit tests for writer-episodic sampling."""

from __future__ import annotations

import numpy as np
import pytest
from scipy.stats import chisquare

from src.exceptions import InsufficientDataError
from src.training.sampler import check_trainable, sample_episode, sampling_rng


class TestSampleEpisode:
    def test_structure(self, toy_dataset, tiny_config) -> None:
        dataset = toy_dataset(writers=5)
        config = tiny_config(writers_per_step=3, extra_genuine=1, forgeries_per_step=2)
        episode = sample_episode(dataset, config, sampling_rng(7, 0))

        assert len(episode.writers) == 3
        assert len(set(episode.writers)) == 3
        assert len(episode.genuine) == 6
        assert episode.genuine_labels == (0, 0, 1, 1, 2, 2)
        assert episode.forgery_labels == (3, 4)
        for (writer, sample), label in zip(episode.genuine, episode.genuine_labels):
            assert episode.writers[label] == writer
            assert 0 <= sample < 3
        for (writer, _), target in zip(episode.forgeries, episode.forgery_targets):
            assert episode.writers[target] == writer

    def test_genuines_distinct_within_writer(self, toy_dataset, tiny_config) -> None:
        dataset = toy_dataset(writers=3, genuine=3)
        config = tiny_config(writers_per_step=3, extra_genuine=2)
        episode = sample_episode(dataset, config, sampling_rng(1, 4))
        assert len(set(episode.genuine)) == len(episode.genuine)

    def test_deterministic_per_step(self, toy_dataset, tiny_config) -> None:
        dataset = toy_dataset(writers=6)
        config = tiny_config()
        a = sample_episode(dataset, config, sampling_rng(3, 10))
        b = sample_episode(dataset, config, sampling_rng(3, 10))
        assert a == b

    def test_steps_draw_different_episodes(self, toy_dataset, tiny_config) -> None:
        dataset = toy_dataset(writers=8)
        config = tiny_config()
        episodes = {sample_episode(dataset, config, sampling_rng(3, step)) for step in range(5)}
        assert len(episodes) > 1

    def test_forgeries_drawn_with_replacement_when_pool_small(self, toy_dataset, tiny_config) -> None:
        dataset = toy_dataset(writers=3, forgeries=1)
        config = tiny_config(writers_per_step=2, forgeries_per_step=5)
        episode = sample_episode(dataset, config, sampling_rng(0, 0))
        assert len(episode.forgeries) == 5
        assert len(set(episode.forgery_labels)) == 5

    def test_no_forgeries_requested(self, toy_dataset, tiny_config) -> None:
        episode = sample_episode(toy_dataset(forgeries=0), tiny_config(forgeries_per_step=0), sampling_rng(0, 0))
        assert episode.forgeries == ()

    def test_forgeries_requested_but_none_available(self, toy_dataset, tiny_config) -> None:
        with pytest.raises(InsufficientDataError, match="no skilled forgeries"):
            sample_episode(toy_dataset(forgeries=0), tiny_config(), sampling_rng(0, 0))


class TestCheckTrainable:
    def test_too_few_writers(self, toy_dataset, tiny_config) -> None:
        with pytest.raises(InsufficientDataError, match="writers per step"):
            check_trainable(toy_dataset(writers=2), tiny_config(writers_per_step=3))

    def test_too_few_genuine(self, toy_dataset, tiny_config) -> None:
        with pytest.raises(InsufficientDataError) as excinfo:
            check_trainable(toy_dataset(genuine=2), tiny_config(extra_genuine=2))
        assert excinfo.value.writer_id == "w000"
        assert excinfo.value.exit_code == 2


def test_sampling_streams_are_independent() -> None:
    a = sampling_rng(5, 0).random(4)
    b = sampling_rng(5, 1).random(4)
    c = sampling_rng(6, 0).random(4)
    assert not np.allclose(a, b)
    assert not np.allclose(a, c)


class TestWriterSelectionFrequencies:
    EPISODES = 10_000

    def _counts(self, toy_dataset, tiny_config) -> tuple[np.ndarray, np.ndarray]:
        dataset = toy_dataset(writers=6, genuine=2, forgeries=0)
        config = tiny_config(writers_per_step=3, extra_genuine=1, forgeries_per_step=0)
        first = np.zeros(len(dataset), dtype=np.int64)
        member = np.zeros(len(dataset), dtype=np.int64)
        for step in range(self.EPISODES):
            writers = sample_episode(dataset, config, sampling_rng(7, step)).writers
            first[writers[0]] += 1
            member[list(writers)] += 1
        return first, member

    def test_uniform_within_three_sigma(self, toy_dataset, tiny_config) -> None:
        first, member = self._counts(toy_dataset, tiny_config)
        n, k = self.EPISODES, len(first)

        # label-0 writer is one multinomial draw over k writers
        p = 1 / k
        assert np.all(np.abs(first - n * p) <= 3 * np.sqrt(n * p * (1 - p)))
        assert chisquare(first).pvalue > 1e-3

        # each writer is in 3 of 6 slots: Bernoulli(1/2) per episode
        q = 3 / k
        assert member.sum() == 3 * n
        assert np.all(np.abs(member - n * q) <= 3 * np.sqrt(n * q * (1 - q)))
