"""CLI command implementations for GAFSV."""

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Annotated, Optional, TypeVar

import typer
from pydantic import BaseModel, ValidationError

from src.cli.utils import _sanitize_path, command_line_values, exit_on_error, signature_files
from src.config import FLAT_KEYS, ConfigLoader, flatten
from src.config.enums import DatasetSplit, Fusion, GafVariant, OptimizerKind, Precision
from src.config.flat import format_value
from src.config.kv_source import render_key_values
from src.config.models import EncodingConfig, EvalConfig, SynthConfig, TrainConfig
from src.exceptions import ConfigValidationError, FormatError
from src.gaf import encode_signature, read_gaf6, write_gaf6, write_pgm
from src.gaf.models import STACK_CHANNELS
from src.model.checkpoint import read_checkpoint
from src.output import ConsoleOutputHandler, write_json_atomic
from src.signature.parser import read_signature
from src.synth.dataset import write_dataset
from src.training.dataset import load_dataset
from src.training.gradcheck import gradient_check
from src.training.trainer import train_loop
from src.verification.evaluate import evaluate, margin_report

# Configure logging
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)
logger = logging.getLogger(__name__)

_TRAIN = TrainConfig()
_SYNTH = SynthConfig()
_EVAL = EvalConfig()
SYNTH_CONFIG_FILE = "synth.conf"

ModelT = TypeVar("ModelT", bound=BaseModel)


def _validated(factory: type[ModelT], **values: object) -> ModelT:
    try:
        return factory.model_validate(values)
    except ValidationError as e:
        raise ConfigValidationError(f"Invalid options: {e}", errors=e) from e


def synth(
    out: Annotated[Path, typer.Option("--out", file_okay=False, help="Dataset directory to create")],
    writers: Annotated[int, typer.Option("--writers", help="Number of writers")] = _SYNTH.writers,
    genuine: Annotated[int, typer.Option("--genuine", help="Genuine samples per writer")] = _SYNTH.genuine,
    forgeries: Annotated[int, typer.Option("--forgeries", help="Skilled forgeries per writer")] = _SYNTH.forgeries,
    seed: Annotated[int, typer.Option("--seed", help="Generator seed")] = _SYNTH.seed,
    M: Annotated[int, typer.Option("--M", help="Resample length recorded for encoding")] = _SYNTH.M,
    warp_amplitude: Annotated[
        float, typer.Option("--warp-amplitude", help="Skilled-forgery time-warp strength")
    ] = _SYNTH.warp_amplitude,
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Worker threads")] = 1,
) -> None:
    """Write signature files, dataset.tsv and splits.tsv."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        config = _validated(
            SynthConfig,
            writers=writers,
            genuine=genuine,
            forgeries=forgeries,
            seed=seed,
            M=M,
            warp_amplitude=warp_amplitude,
        )
        values = {key: format_value(value) for key, value in config.model_dump().items()}
        output.print_config("Synthetic dataset", values)
        dataset_dir = _sanitize_path(out)
        dataset_dir.mkdir(parents=True, exist_ok=True)
        splits = write_dataset(dataset_dir, config, jobs=jobs)
        (dataset_dir / SYNTH_CONFIG_FILE).write_text(render_key_values(values), encoding="utf-8")
        n_train = sum(split is DatasetSplit.TRAIN for split in splits.values())
        output.info(f"Wrote {config.writers} writers ({n_train} train, {len(splits) - n_train} eval) to {dataset_dir}")


def encode(
    input_path: Annotated[Path, typer.Option("--in", exists=True, help="Signature file or directory")],
    out: Annotated[Path, typer.Option("--out", help="GAF6 file, or directory when --in is a directory")],
    M: Annotated[int, typer.Option("--M", help="Resample length (even)")] = _TRAIN.encoding.M,
    gaf_variant: Annotated[
        GafVariant, typer.Option("--gaf-variant", help="asym (split halves) or sym")
    ] = _TRAIN.encoding.gaf_variant,
    channels: Annotated[
        str, typer.Option("--channels", help="Comma-separated kinematic channels")
    ] = format_value(_TRAIN.encoding.channels),
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Worker threads for directory input")] = 1,
) -> None:
    """Encode one signature, or every *.txt under a directory, into GAF6 stacks."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        encoding = _validated(EncodingConfig, M=M, gaf_variant=gaf_variant, channels=channels)
        output.print_config(
            "Encoding",
            {"M": str(encoding.M), "gaf_variant": encoding.gaf_variant.value, "channels": format_value(encoding.channels)},
        )
        source = _sanitize_path(input_path)
        target = _sanitize_path(out)
        if source.is_file():
            write_gaf6(target, encode_signature(read_signature(source), encoding))
            output.info(f"Wrote {target}")
            return

        files = signature_files(source)

        def encode_one(path: Path) -> Path:
            destination = (target / path.relative_to(source)).with_suffix(".gaf6")
            write_gaf6(destination, encode_signature(read_signature(path), encoding))
            return destination

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            written = list(pool.map(encode_one, files))
        output.info(f"Encoded {len(written)} signatures into {target}")


def train(
    ctx: typer.Context,
    data: Annotated[Path, typer.Option("--data", exists=True, file_okay=False, help="Dataset directory")],
    out: Annotated[Path, typer.Option("--out", file_okay=False, help="Run directory")],
    config: Annotated[
        Optional[Path],
        typer.Option("--config", exists=True, dir_okay=False, help="Flat key = value (or YAML) config file"),
    ] = None,
    resume: Annotated[
        Optional[Path],
        typer.Option("--resume", exists=True, dir_okay=False, help="Checkpoint to continue from"),
    ] = None,
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Encoding worker threads")] = 1,
    M: Annotated[int, typer.Option("--M", help="Resample length")] = _TRAIN.encoding.M,
    gaf_variant: Annotated[GafVariant, typer.Option("--gaf-variant")] = _TRAIN.encoding.gaf_variant,
    channels: Annotated[str, typer.Option("--channels")] = format_value(_TRAIN.encoding.channels),
    branch_channels: Annotated[str, typer.Option("--branch-channels")] = format_value(
        _TRAIN.encoder.branch_channels
    ),
    d: Annotated[int, typer.Option("--d", help="Token width")] = _TRAIN.encoder.d,
    heads: Annotated[int, typer.Option("--heads")] = _TRAIN.encoder.heads,
    self_attn_layers: Annotated[int, typer.Option("--self-attn-layers")] = _TRAIN.encoder.self_attn_layers,
    d_z: Annotated[int, typer.Option("--d-z", help="Embedding width")] = _TRAIN.encoder.d_z,
    ffn_expansion: Annotated[int, typer.Option("--ffn-expansion")] = _TRAIN.encoder.ffn_expansion,
    fusion: Annotated[Fusion, typer.Option("--fusion")] = _TRAIN.encoder.fusion,
    precision: Annotated[
        Precision,
        typer.Option(
            "--precision", help="Parameter dtype; float64 (default) writes GAFW v2 checkpoints, float32 writes v1"
        ),
    ] = _TRAIN.encoder.precision,
    bn_momentum: Annotated[float, typer.Option("--bn-momentum")] = _TRAIN.encoder.bn_momentum,
    margin: Annotated[float, typer.Option("--margin", help="Triplet margin (cosine)")] = _TRAIN.loss.margin,
    lambda_f: Annotated[float, typer.Option("--lambda-f")] = _TRAIN.loss.lambda_f,
    lambda_u: Annotated[float, typer.Option("--lambda-u")] = _TRAIN.loss.lambda_u,
    sample_term: Annotated[bool, typer.Option("--sample-term/--no-sample-term")] = _TRAIN.loss.sample_term,
    cluster_term: Annotated[bool, typer.Option("--cluster-term/--no-cluster-term")] = _TRAIN.loss.cluster_term,
    uniformity_term: Annotated[
        bool, typer.Option("--uniformity-term/--no-uniformity-term")
    ] = _TRAIN.loss.uniformity_term,
    writers_per_step: Annotated[int, typer.Option("--writers-per-step")] = _TRAIN.writers_per_step,
    extra_genuine: Annotated[int, typer.Option("--extra-genuine")] = _TRAIN.extra_genuine,
    forgeries_per_step: Annotated[int, typer.Option("--forgeries-per-step")] = _TRAIN.forgeries_per_step,
    steps: Annotated[int, typer.Option("--steps")] = _TRAIN.steps,
    learning_rate: Annotated[float, typer.Option("--learning-rate")] = _TRAIN.learning_rate,
    optimizer: Annotated[OptimizerKind, typer.Option("--optimizer")] = _TRAIN.optimizer,
    momentum: Annotated[float, typer.Option("--momentum")] = _TRAIN.momentum,
    seed: Annotated[int, typer.Option("--seed", help="Run seed")] = _TRAIN.seed,
) -> None:
    """Train on the dataset's train split. Flags override --config values."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        overrides = command_line_values(ctx, list(FLAT_KEYS))
        loader = ConfigLoader.from_path(config, overrides=overrides)
        run_config = loader.load()
        output.print_config(f"Training ({loader.source_description})", flatten(run_config))

        checkpoint = read_checkpoint(_sanitize_path(resume)) if resume is not None else None
        dataset = load_dataset(_sanitize_path(data), run_config.encoding, run_config.encoder.fusion, jobs=jobs)
        run = train_loop(dataset.train, run_config, _sanitize_path(out), resume=checkpoint)
        output.info(f"Checkpoint written to {run.checkpoint_path} after {run.steps_completed} steps")


def eval_command(
    checkpoint: Annotated[Path, typer.Option("--checkpoint", exists=True, dir_okay=False, help="GAFW checkpoint")],
    data: Annotated[Path, typer.Option("--data", exists=True, file_okay=False, help="Dataset directory")],
    enroll: Annotated[int, typer.Option("--enroll", help="References per prototype")] = _EVAL.enroll,
    seed: Annotated[int, typer.Option("--seed", help="Seed for random-impostor draws")] = _EVAL.seed,
    report: Annotated[
        Optional[Path], typer.Option("--report", dir_okay=False, help="Write the report as JSON")
    ] = None,
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Encoding worker threads")] = 1,
) -> None:
    """Enroll, score and compute skilled/random EERs on the eval split."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        eval_config = _validated(EvalConfig, enroll=enroll, seed=seed)
        ckpt = read_checkpoint(_sanitize_path(checkpoint))
        output.print_config(
            "Evaluation",
            {**flatten(ckpt.config), "checkpoint_step": str(ckpt.step), "enroll": str(enroll), "eval_seed": str(seed)},
        )
        model = ckpt.restore()
        dataset = load_dataset(_sanitize_path(data), ckpt.config.encoding, ckpt.config.encoder.fusion, jobs=jobs)
        result = evaluate(model, dataset.eval, eval_config)
        output.print_eval_report(result)
        if report is not None:
            write_json_atomic(result, _sanitize_path(report))
            output.info(f"Report written to {report}")


def gradcheck(
    seed: Annotated[int, typer.Option("--seed", help="Initialisation and sampling seed")] = 1,
    config: Annotated[
        Optional[Path], typer.Option("--config", exists=True, dir_okay=False, help="Configuration file")
    ] = None,
    coordinates: Annotated[int, typer.Option("--coordinates", min=1, help="Parameters sampled")] = 200,
    step: Annotated[float, typer.Option("--step", help="Central-difference step")] = 1e-5,
) -> None:
    """Compare autograd gradients of the full loss with central differences."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        run_config = ConfigLoader.from_path(config, overrides={"seed": seed}).load()
        output.print_config("Gradient check", flatten(run_config))
        result = gradient_check(run_config, coordinates=coordinates, step=step)
        output.info(f"max relative gradient error: {result.max_relative_error:.3e} (tolerance {result.tolerance:.0e})")


def dump_image(
    input_path: Annotated[Path, typer.Option("--in", exists=True, dir_okay=False, help="GAF6 file")],
    channel: Annotated[int, typer.Option("--channel", help="Channel index 0-5")],
    out: Annotated[Path, typer.Option("--out", dir_okay=False, help="PGM file to write")],
) -> None:
    """Write one channel of a GAF6 stack as a binary PGM."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        if not 0 <= channel < STACK_CHANNELS:
            raise ConfigValidationError(f"--channel must be in 0..{STACK_CHANNELS - 1}, got {channel}")
        stack = read_gaf6(_sanitize_path(input_path))
        output.print_config("Image dump", {"in": str(input_path), "channel": str(channel), "side": str(stack.side)})
        write_pgm(_sanitize_path(out), stack.channels[channel])
        output.info(f"Wrote {out} ({stack.side}x{stack.side})")


def stats(
    checkpoint: Annotated[Path, typer.Option("--checkpoint", exists=True, dir_okay=False, help="GAFW checkpoint")],
    data: Annotated[Path, typer.Option("--data", exists=True, file_okay=False, help="Dataset directory")],
    report: Annotated[
        Optional[Path], typer.Option("--report", dir_okay=False, help="Write the margins as JSON")
    ] = None,
    split: Annotated[DatasetSplit, typer.Option("--split", help="Writers to analyse")] = DatasetSplit.EVAL,
    jobs: Annotated[int, typer.Option("--jobs", min=1, help="Encoding worker threads")] = 1,
) -> None:
    """Genuine-genuine and genuine-forgery cosine margins per writer."""
    output = ConsoleOutputHandler()
    with exit_on_error(output):
        ckpt = read_checkpoint(_sanitize_path(checkpoint))
        output.print_config("Margin statistics", {**flatten(ckpt.config), "split": split.value})
        dataset = load_dataset(_sanitize_path(data), ckpt.config.encoding, ckpt.config.encoder.fusion, jobs=jobs)
        chosen = dataset.train if split is DatasetSplit.TRAIN else dataset.eval
        if not chosen.writers:
            raise FormatError(f"the {split.value} split of {data} has no writers")
        result = margin_report(ckpt.restore(), chosen, step=ckpt.step)
        output.print_margins(result)
        if report is not None:
            write_json_atomic(result, _sanitize_path(report))
            output.info(f"Report written to {report}")
