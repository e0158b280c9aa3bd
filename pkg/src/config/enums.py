"""Configuration enums for GAFSV."""

from enum import Enum


class SignatureLabel(str, Enum):
    """Provenance of a signing act; values are the tokens used in signature files."""

    GENUINE = "genuine"
    SKILLED_FORGERY = "skilled"
    RANDOM_IMPOSTOR = "random"

    def __str__(self) -> str:  # pragma: no cover - convenience for Typer display
        return self.value


class GafKind(str, Enum):
    """Gramian angular field flavour."""

    GASF = "gasf"
    GADF = "gadf"


class GafVariant(str, Enum):
    """How a kinematic series is turned into a square field."""

    ASYM = "asym"
    SYM = "sym"

    def __str__(self) -> str:  # pragma: no cover - convenience for Typer display
        return self.value


class KinematicChannel(str, Enum):
    """Kinematic series, in stack order."""

    V = "v"
    P_DOT = "dp"
    THETA = "theta"

    @property
    def index(self) -> int:
        """Position of the channel in the canonical [v, dp, theta] order."""
        return list(KinematicChannel).index(self)

    @property
    def stack_slots(self) -> tuple[int, int]:
        """(GASF slot, GADF slot) of this channel inside a six-channel stack."""
        return 2 * self.index, 2 * self.index + 1


class Fusion(str, Enum):
    """Branch structure of the embedding network."""

    CROSS_ATTENTION = "cross_attention"
    CONCAT_ONLY = "concat_only"
    SINGLE_GASF = "single_gasf"
    SINGLE_GADF = "single_gadf"
    SINGLE_TRAJECTORY = "single_trajectory"

    def __str__(self) -> str:  # pragma: no cover - convenience for Typer display
        return self.value

    @property
    def is_dual(self) -> bool:
        return self in (Fusion.CROSS_ATTENTION, Fusion.CONCAT_ONLY)

    @property
    def uses_trajectory(self) -> bool:
        return self is Fusion.SINGLE_TRAJECTORY

    @property
    def input_channels(self) -> int:
        """Channel count of the image the encoder consumes."""
        return 1 if self.uses_trajectory else 6


class OptimizerKind(str, Enum):
    """Parameter update rule."""

    SGD = "sgd"
    SGD_MOMENTUM = "sgd_momentum"
    ADAM = "adam"

    def __str__(self) -> str:  # pragma: no cover - convenience for Typer display
        return self.value


class Precision(str, Enum):
    """Floating-point precision of model parameters and activations."""

    FLOAT64 = "float64"
    FLOAT32 = "float32"


class Mode(str, Enum):
    """Forward-pass mode; INFER uses batch-norm running statistics."""

    TRAIN = "train"
    INFER = "infer"


class Decision(str, Enum):
    """Outcome of a threshold decision."""

    ACCEPT = "accept"
    REJECT = "reject"


class DatasetSplit(str, Enum):
    """Writer-independent partition a writer belongs to."""

    TRAIN = "train"
    EVAL = "eval"
