"""Unit tests for the ablation runner."""

from __future__ import annotations

from pathlib import Path

import pytest
from typer.testing import CliRunner

import src.experiments.ablation as ablation_module
from src.config.enums import Fusion, GafVariant
from src.config.models import EvalConfig, SynthConfig
from src.exceptions import DatasetError
from src.experiments.ablation import (
    REPORT_FILE,
    VARIANTS,
    AblationReport,
    AblationRow,
    app,
    run_ablation,
    variant_config,
)
from src.output.report_json import read_json_model
from src.synth.dataset import write_dataset
from src.verification.report import EvalReport


class TestVariantConfig:
    def test_replaces_only_variant_fields(self, tiny_config) -> None:
        base = tiny_config(margin=0.3)
        config = variant_config(base, Fusion.SINGLE_GADF, GafVariant.SYM, steps=11)
        assert config.encoder.fusion is Fusion.SINGLE_GADF
        assert config.encoding.gaf_variant is GafVariant.SYM
        assert config.steps == 11
        assert config.loss == base.loss
        assert config.encoder.d == base.encoder.d

    def test_covers_every_fusion(self) -> None:
        assert {fusion for _, fusion, _ in VARIANTS} == set(Fusion)
        assert len({name for name, _, _ in VARIANTS}) == len(VARIANTS)


class TestRunAblation:
    def test_trains_and_evaluates_each_variant(self, mocker, tmp_path: Path, tiny_config) -> None:
        load = mocker.patch.object(ablation_module, "load_dataset")
        train = mocker.patch.object(ablation_module, "train_loop")
        mocker.patch.object(
            ablation_module,
            "evaluate",
            return_value=EvalReport(enroll=1, sf_eer=0.25, rf_eer=0.125, delta=0.5),
        )

        result = run_ablation(
            tmp_path / "data", tiny_config(), steps=2, out_dir=tmp_path / "out", eval_config=EvalConfig(enroll=1)
        )

        assert load.call_count == len(VARIANTS)
        assert [call.args[2] for call in load.call_args_list] == [f for _, f, _ in VARIANTS]
        out_dirs = [call.args[2] for call in train.call_args_list]
        assert out_dirs == [tmp_path / "out" / name for name, _, _ in VARIANTS]
        assert all(call.args[1].steps == 2 for call in train.call_args_list)
        assert [row.sf_eer for row in result.rows] == [0.25] * len(VARIANTS)
        assert read_json_model(AblationReport, tmp_path / "out" / REPORT_FILE) == result


class TestAblationCommand:
    def test_prints_table(self, mocker, tmp_path: Path) -> None:
        row = AblationRow(
            name="single_gasf",
            fusion=Fusion.SINGLE_GASF,
            gaf_variant=GafVariant.ASYM,
            sf_eer=0.3,
            rf_eer=0.2,
            delta=0.1,
        )
        run = mocker.patch.object(ablation_module, "run_ablation", return_value=AblationReport(steps=5, rows=[row]))
        result = CliRunner().invoke(app, ["--data", str(tmp_path), "--out", str(tmp_path / "out"), "--steps", "5"])
        assert result.exit_code == 0, result.output
        assert "single_gasf" in result.output
        assert run.call_args.args[2] == 5

    def test_data_error_exit_code(self, mocker, tmp_path: Path) -> None:
        mocker.patch.object(ablation_module, "run_ablation", side_effect=DatasetError("dataset index not found"))
        result = CliRunner().invoke(app, ["--data", str(tmp_path), "--out", str(tmp_path / "out")])
        assert result.exit_code == 2

    @pytest.mark.slow
    def test_end_to_end_on_synthetic_data(self, tmp_path: Path, tiny_config) -> None:
        write_dataset(tmp_path / "data", SynthConfig(writers=5, genuine=3, forgeries=2, M=16))
        result = run_ablation(
            tmp_path / "data", tiny_config(), steps=1, out_dir=tmp_path / "out", eval_config=EvalConfig(enroll=2)
        )
        assert [row.name for row in result.rows] == [name for name, _, _ in VARIANTS]
        assert all(row.sf_eer is not None for row in result.rows)
