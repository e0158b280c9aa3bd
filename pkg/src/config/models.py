"""Pydantic models for GAFSV configuration."""

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config.enums import Fusion, GafVariant, KinematicChannel, OptimizerKind, Precision

ALL_CHANNELS: tuple[KinematicChannel, ...] = tuple(KinematicChannel)


def _split_csv(value: Any) -> Any:
    """Accept comma-separated strings for tuple-valued fields."""
    if isinstance(value, str):
        return tuple(part.strip() for part in value.split(",") if part.strip())
    return value


class EncodingConfig(BaseModel):
    """How raw signatures become encoder input images."""

    model_config = ConfigDict(frozen=True)

    M: int = Field(default=64, ge=4, description="Resample length of each kinematic series")
    gaf_variant: GafVariant = Field(default=GafVariant.ASYM, description="asym (split halves) or sym")
    channels: tuple[KinematicChannel, ...] = Field(
        default=ALL_CHANNELS, description="Kinematic channels kept in the stack"
    )

    @field_validator("M")
    @classmethod
    def validate_even(cls, value: int) -> int:
        if value % 2:
            raise ValueError(f"M must be even, got {value}")
        return value

    @field_validator("channels", mode="before")
    @classmethod
    def parse_channels(cls, value: Any) -> Any:
        return _split_csv(value)

    @field_validator("channels")
    @classmethod
    def canonical_channels(cls, value: tuple[KinematicChannel, ...]) -> tuple[KinematicChannel, ...]:
        if not value:
            raise ValueError("at least one kinematic channel is required")
        return tuple(ch for ch in ALL_CHANNELS if ch in value)

    @property
    def side(self) -> int:
        """Side of every GAF matrix (M/2)."""
        return self.M // 2


class EncoderConfig(BaseModel):
    """Shape and initialisation of the dual-branch embedding network."""

    model_config = ConfigDict(frozen=True)

    input_side: int = Field(default=32, ge=1, description="Image side H (= M/2)")
    branch_channels: tuple[int, ...] = Field(default=(8, 16, 32), description="Conv stem stage widths")
    d: int = Field(default=32, ge=1, description="Token width")
    heads: int = Field(default=4, ge=1, description="Attention heads")
    self_attn_layers: int = Field(default=2, ge=0, description="Self-attention layers per branch")
    d_z: int = Field(default=32, ge=2, description="Embedding width")
    ffn_expansion: int = Field(default=4, ge=1, description="Feed-forward hidden width multiplier")
    fusion: Fusion = Field(default=Fusion.CROSS_ATTENTION, description="Branch structure")
    seed: int = Field(default=0, description="Initialisation seed")
    precision: Precision = Field(default=Precision.FLOAT64, description="Parameter dtype")
    bn_momentum: float = Field(default=0.1, gt=0, le=1, description="Batch-norm running-stat momentum")
    bn_eps: float = Field(default=1e-5, ge=0, description="Batch-norm epsilon")
    pos_embedding_std: float = Field(default=0.02, ge=0, description="Positional embedding init std")

    @field_validator("branch_channels", mode="before")
    @classmethod
    def parse_branch_channels(cls, value: Any) -> Any:
        return _split_csv(value)

    @field_validator("branch_channels")
    @classmethod
    def validate_branch_channels(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value:
            raise ValueError("branch_channels needs at least one stage")
        if any(width < 1 for width in value):
            raise ValueError(f"branch_channels must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def validate_shapes(self) -> "EncoderConfig":
        if self.d % self.heads:
            raise ValueError(f"d={self.d} must be divisible by heads={self.heads}")
        stride = 2 ** len(self.branch_channels)
        if self.input_side % stride:
            raise ValueError(
                f"input_side={self.input_side} must be divisible by 2^{len(self.branch_channels)}"
            )
        return self

    @property
    def backbone_channels(self) -> int:
        """D_bb, the width of the final stem stage."""
        return self.branch_channels[-1]

    @property
    def token_grid(self) -> int:
        """S, the spatial side of the stem output."""
        return self.input_side // 2 ** len(self.branch_channels)

    @property
    def n_tokens(self) -> int:
        return self.token_grid**2

    @property
    def branch_count(self) -> int:
        return 2 if self.fusion.is_dual else 1

    @property
    def pooled_width(self) -> int:
        """Width of the pooled vector fed to the projection head."""
        return self.branch_count * self.d


class LossConfig(BaseModel):
    """Margin and weights of the training objective, plus ablation toggles."""

    model_config = ConfigDict(frozen=True)

    margin: float = Field(default=0.2, gt=0, lt=2, description="Triplet margin m (cosine units)")
    lambda_f: float = Field(default=1.0, ge=0, description="Cluster-level forgery term weight")
    lambda_u: float = Field(default=0.1, ge=0, description="Uniformity weight")
    sample_term: bool = Field(default=True, description="Include the sample-level triplet term")
    cluster_term: bool = Field(default=True, description="Include the cluster-level forgery term")
    uniformity_term: bool = Field(default=True, description="Include the uniformity regulariser")


class TrainConfig(BaseModel):
    """Episodic training run."""

    model_config = ConfigDict(frozen=True)

    writers_per_step: int = Field(default=8, ge=2, description="W_b, writers per episode")
    extra_genuine: int = Field(default=3, ge=1, description="R, each writer contributes R+1 genuines")
    forgeries_per_step: int = Field(default=8, ge=0, description="B_f, forgeries per episode")
    steps: int = Field(default=2000, ge=0, description="Optimisation steps")
    learning_rate: float = Field(default=1e-3, ge=0, description="Step size")
    optimizer: OptimizerKind = Field(default=OptimizerKind.ADAM, description="Update rule")
    momentum: float = Field(default=0.9, ge=0, lt=1, description="Momentum for sgd_momentum")
    seed: int = Field(default=7, description="Run seed (initialisation and sampling streams)")
    loss: LossConfig = Field(default_factory=LossConfig)
    encoder: EncoderConfig = Field(default_factory=EncoderConfig)
    encoding: EncodingConfig = Field(default_factory=EncodingConfig)

    @model_validator(mode="after")
    def validate_image_side(self) -> "TrainConfig":
        if self.encoder.input_side != self.encoding.side:
            raise ValueError(
                f"encoder input_side={self.encoder.input_side} does not match M/2={self.encoding.side}"
            )
        return self

    @property
    def genuine_per_step(self) -> int:
        """N_g, genuine images per episode."""
        return self.writers_per_step * (self.extra_genuine + 1)


class SynthConfig(BaseModel):
    """Synthetic dataset generation."""

    model_config = ConfigDict(frozen=True)

    writers: int = Field(default=50, ge=1, description="Number of writers")
    genuine: int = Field(default=10, ge=1, description="Genuine samples per writer")
    forgeries: int = Field(default=6, ge=1, description="Skilled forgeries per writer")
    seed: int = Field(default=7, description="Generator seed")
    M: int = Field(default=64, ge=4, description="Resample length used when encoding")
    warp_amplitude: float = Field(default=0.3, ge=0, lt=1, description="Skilled-forgery time-warp strength")
    train_fraction: float = Field(default=0.8, gt=0, lt=1, description="Share of writers used for training")


class EvalConfig(BaseModel):
    """Verification protocol."""

    model_config = ConfigDict(frozen=True)

    enroll: int = Field(default=4, ge=1, description="R_enroll, references per writer")
    seed: int = Field(default=0, description="Seed for drawing random-impostor queries")
