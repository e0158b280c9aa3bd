"""Fusion and GAF-variant ablation: train and evaluate each variant on one dataset.

Run as ``python -m src.experiments.ablation --data DIR --out DIR``. Orderings
between variants are reported, never asserted.
"""

import logging
from pathlib import Path
from typing import Annotated, Optional

import typer
from pydantic import BaseModel, ConfigDict

from src.config.enums import Fusion, GafVariant
from src.config.loader import ConfigLoader
from src.config.models import EvalConfig, TrainConfig
from src.exceptions import GafsvError
from src.output import ConsoleOutputHandler, write_json_atomic
from src.training.dataset import load_dataset
from src.training.trainer import train_loop
from src.verification.evaluate import evaluate

logger = logging.getLogger(__name__)

REPORT_FILE = "ablation.json"

VARIANTS: tuple[tuple[str, Fusion, GafVariant], ...] = (
    ("cross_attention", Fusion.CROSS_ATTENTION, GafVariant.ASYM),
    ("concat_only", Fusion.CONCAT_ONLY, GafVariant.ASYM),
    ("single_gasf", Fusion.SINGLE_GASF, GafVariant.ASYM),
    ("single_gadf", Fusion.SINGLE_GADF, GafVariant.ASYM),
    ("single_trajectory", Fusion.SINGLE_TRAJECTORY, GafVariant.ASYM),
    ("cross_attention_sym", Fusion.CROSS_ATTENTION, GafVariant.SYM),
)


class AblationRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    fusion: Fusion
    gaf_variant: GafVariant
    sf_eer: float | None
    rf_eer: float | None
    delta: float | None


class AblationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: int
    rows: list[AblationRow]


def variant_config(base: TrainConfig, fusion: Fusion, variant: GafVariant, steps: int) -> TrainConfig:
    """``base`` with fusion, GAF variant and step count replaced (re-validated)."""
    data = base.model_dump()
    data["encoder"]["fusion"] = fusion
    data["encoding"]["gaf_variant"] = variant
    data["steps"] = steps
    return TrainConfig.model_validate(data)


def run_ablation(
    data_dir: Path,
    base_config: TrainConfig,
    steps: int,
    out_dir: Path,
    eval_config: EvalConfig = EvalConfig(),
    jobs: int = 1,
) -> AblationReport:
    rows: list[AblationRow] = []
    for name, fusion, variant in VARIANTS:
        config = variant_config(base_config, fusion, variant, steps)
        data = load_dataset(data_dir, config.encoding, fusion, jobs=jobs)
        run = train_loop(data.train, config, out_dir / name)
        report = evaluate(run.model, data.eval, eval_config)
        logger.info(f"{name}: sf EER {report.sf_eer}, rf EER {report.rf_eer}")
        rows.append(
            AblationRow(
                name=name,
                fusion=fusion,
                gaf_variant=variant,
                sf_eer=report.sf_eer,
                rf_eer=report.rf_eer,
                delta=report.delta,
            )
        )
    result = AblationReport(steps=steps, rows=rows)
    write_json_atomic(result, out_dir / REPORT_FILE)
    return result


app = typer.Typer(add_completion=False, help="Train and evaluate every fusion / GAF-variant ablation.")


@app.command()
def ablation(
    data: Annotated[Path, typer.Option("--data", exists=True, file_okay=False, help="Dataset directory")],
    out: Annotated[Path, typer.Option("--out", file_okay=False, help="Directory for runs and ablation.json")],
    steps: Annotated[int, typer.Option("--steps", min=0, help="Training steps per variant")] = 2000,
    config: Annotated[
        Optional[Path],
        typer.Option("--config", exists=True, dir_okay=False, help="Base configuration file"),
    ] = None,
    enroll: Annotated[int, typer.Option("--enroll", min=1, help="References per prototype")] = 4,
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Encoding worker threads")] = 1,
) -> None:
    """Run all variants and print the comparison table."""
    output = ConsoleOutputHandler()
    try:
        base = ConfigLoader.from_path(config).load()
        result = run_ablation(data, base, steps, out, EvalConfig(enroll=enroll), jobs=jobs)
    except GafsvError as e:
        output.error(str(e))
        raise typer.Exit(code=e.exit_code) from e
    output.print_ablation(result.rows)


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING)
    app()
