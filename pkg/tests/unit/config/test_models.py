"""Unit tests for Pydantic configuration models."""

from __future__ import annotations

import pytest
from pydantic import ValidationError

from src.config.enums import Fusion, KinematicChannel
from src.config.models import EncoderConfig, EncodingConfig, LossConfig, SynthConfig, TrainConfig


class TestEncodingConfig:
    """Tests for EncodingConfig."""

    def test_defaults(self) -> None:
        config = EncodingConfig()
        assert config.M == 64
        assert config.side == 32
        assert config.channels == tuple(KinematicChannel)

    def test_odd_m_rejected(self) -> None:
        with pytest.raises(ValidationError, match="even"):
            EncodingConfig(M=63)

    def test_channels_parsed_from_csv_in_canonical_order(self) -> None:
        config = EncodingConfig(channels="theta, v")
        assert config.channels == (KinematicChannel.V, KinematicChannel.THETA)

    def test_empty_channel_subset_rejected(self) -> None:
        with pytest.raises(ValidationError):
            EncodingConfig(channels="")

    def test_unknown_channel_rejected(self) -> None:
        with pytest.raises(ValidationError):
            EncodingConfig(channels="v,accel")


class TestEncoderConfig:
    """Tests for EncoderConfig shape invariants."""

    def test_derived_shapes(self) -> None:
        config = EncoderConfig(input_side=32, branch_channels=(8, 16, 32), d=32)
        assert config.backbone_channels == 32
        assert config.token_grid == 4
        assert config.n_tokens == 16
        assert config.pooled_width == 64

    def test_single_branch_pooled_width(self) -> None:
        config = EncoderConfig(fusion=Fusion.SINGLE_GADF)
        assert config.branch_count == 1
        assert config.pooled_width == config.d

    def test_d_must_divide_by_heads(self) -> None:
        with pytest.raises(ValidationError, match="divisible by heads"):
            EncoderConfig(d=30, heads=4)

    def test_side_must_survive_downsampling(self) -> None:
        with pytest.raises(ValidationError, match="input_side"):
            EncoderConfig(input_side=12, branch_channels=(4, 8, 16))

    def test_branch_channels_from_csv(self) -> None:
        assert EncoderConfig(branch_channels="4, 8").branch_channels == (4, 8)

    @pytest.mark.parametrize("channels", ["", "4,0"])
    def test_invalid_branch_channels(self, channels: str) -> None:
        with pytest.raises(ValidationError):
            EncoderConfig(input_side=8, branch_channels=channels)


class TestLossConfig:
    @pytest.mark.parametrize("margin", [0.0, 2.0, -0.1])
    def test_margin_bounds(self, margin: float) -> None:
        with pytest.raises(ValidationError):
            LossConfig(margin=margin)

    def test_defaults(self) -> None:
        config = LossConfig()
        assert (config.margin, config.lambda_f, config.lambda_u) == (0.2, 1.0, 0.1)
        assert config.sample_term and config.cluster_term and config.uniformity_term


class TestTrainConfig:
    """Tests for TrainConfig."""

    def test_defaults_are_consistent(self) -> None:
        config = TrainConfig()
        assert config.encoder.input_side == config.encoding.side
        assert config.genuine_per_step == 32

    def test_mismatched_image_side_rejected(self) -> None:
        with pytest.raises(ValidationError, match="does not match"):
            TrainConfig(encoding=EncodingConfig(M=32))

    @pytest.mark.parametrize(
        "field,value",
        [("writers_per_step", 1), ("extra_genuine", 0), ("forgeries_per_step", -1)],
    )
    def test_episode_bounds(self, field: str, value: int) -> None:
        with pytest.raises(ValidationError):
            TrainConfig(**{field: value})

    def test_frozen(self) -> None:
        config = TrainConfig()
        with pytest.raises(ValidationError):
            config.steps = 5  # type: ignore[misc]


class TestSynthConfig:
    def test_defaults(self) -> None:
        config = SynthConfig()
        assert (config.writers, config.genuine, config.forgeries, config.seed, config.M) == (50, 10, 6, 7, 64)

    def test_warp_amplitude_below_one(self) -> None:
        with pytest.raises(ValidationError):
            SynthConfig(warp_amplitude=1.0)
