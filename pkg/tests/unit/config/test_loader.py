"""Unit tests for ConfigLoader precedence and the flat key vocabulary."""

from __future__ import annotations

from pathlib import Path

import pytest

from src.config import FLAT_KEYS, ConfigLoader, flatten, nest
from src.config.enums import Fusion, OptimizerKind
from src.config.models import TrainConfig
from src.exceptions import ConfigValidationError, UnknownConfigKeyError


class TestConfigLoader:
    """Tests for defaults < file < command-line precedence."""

    def test_defaults_without_sources(self) -> None:
        assert ConfigLoader().load() == TrainConfig()

    def test_file_values_override_defaults(self) -> None:
        config = ConfigLoader({"steps": "12", "fusion": "concat_only"}).load()
        assert config.steps == 12
        assert config.encoder.fusion is Fusion.CONCAT_ONLY

    def test_overrides_win_over_file(self) -> None:
        config = ConfigLoader({"steps": "12"}, overrides={"steps": 99}).load()
        assert config.steps == 99

    def test_m_drives_encoder_side(self) -> None:
        config = ConfigLoader({"M": "32", "branch_channels": "4,8"}).load()
        assert config.encoding.M == 32
        assert config.encoder.input_side == 16

    def test_seed_feeds_initialisation(self) -> None:
        config = ConfigLoader(overrides={"seed": 11}).load()
        assert config.seed == config.encoder.seed == 11

    def test_unknown_file_key(self) -> None:
        loader = ConfigLoader({"learning_rat": "0.1"}, source_description="config file: x.conf")
        with pytest.raises(UnknownConfigKeyError, match="learning_rat"):
            loader.load()

    def test_unknown_override_key(self) -> None:
        with pytest.raises(UnknownConfigKeyError):
            ConfigLoader(overrides={"bogus": 1}).load()

    def test_invalid_value_wrapped(self) -> None:
        with pytest.raises(ConfigValidationError) as exc_info:
            ConfigLoader({"writers_per_step": "1"}).load()
        assert exc_info.value.exit_code == 1
        assert exc_info.value.errors is not None

    def test_from_path_reads_key_value_file(self, tmp_path: Path) -> None:
        path = tmp_path / "run.conf"
        path.write_text("# comment\noptimizer = sgd\nlearning_rate = 0.5\n", encoding="utf-8")
        loader = ConfigLoader.from_path(path)
        config = loader.load()
        assert config.optimizer is OptimizerKind.SGD
        assert config.learning_rate == 0.5
        assert str(path) in loader.source_description

    def test_from_path_without_file_uses_defaults(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.chdir(tmp_path)
        loader = ConfigLoader.from_path(None)
        assert loader.source_description == "built-in defaults"
        assert loader.load() == TrainConfig()


class TestFlatVocabulary:
    def test_flatten_covers_every_key(self) -> None:
        assert list(flatten(TrainConfig())) == list(FLAT_KEYS)

    def test_flatten_then_load_reproduces_config(self) -> None:
        original = ConfigLoader({"channels": "v,theta", "sample_term": "false", "d": "16"}).load()
        assert ConfigLoader(flatten(original)).load() == original

    def test_flatten_formats(self) -> None:
        flat = flatten(TrainConfig())
        assert flat["branch_channels"] == "8,16,32"
        assert flat["channels"] == "v,dp,theta"
        assert flat["cluster_term"] == "true"
        assert flat["fusion"] == "cross_attention"

    def test_nest_places_keys(self) -> None:
        nested = nest({"margin": 0.3, "M": 16, "steps": 4})
        assert nested["loss"]["margin"] == 0.3
        assert nested["encoding"]["M"] == 16
        assert nested["encoder"]["input_side"] == 8
        assert nested["steps"] == 4
