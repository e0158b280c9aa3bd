"""Embedding network exceptions."""

from src.exceptions.base import ConfigError, NumericError


class ShapeMismatchError(ConfigError):
    """Raised when an input tensor does not match the encoder configuration."""


class DegenerateEmbeddingError(NumericError):
    """Raised when a projected vector has zero norm and cannot be L2-normalised."""


class NonFiniteLossError(NumericError):
    """Raised when a loss (or a layer feeding it) evaluates to NaN or infinity.

    Attributes:
        layer_path: Dotted path of the first module whose output was non-finite,
            or ``"loss"`` when every layer produced finite values
    """

    def __init__(self, layer_path: str, value: float | None = None) -> None:
        detail = f" (value {value})" if value is not None else ""
        super().__init__(f"Non-finite value produced at '{layer_path}'{detail}.")
        self.layer_path = layer_path
        self.value = value


class GradientCheckError(NumericError):
    """Raised when analytic and finite-difference gradients disagree."""

    def __init__(self, max_relative_error: float, tolerance: float) -> None:
        super().__init__(
            f"Gradient check failed: max relative error {max_relative_error:.3e} "
            f"exceeds tolerance {tolerance:.1e}."
        )
        self.max_relative_error = max_relative_error
        self.tolerance = tolerance


class NonUnitEmbeddingError(NumericError):
    """Raised when cosine similarities are requested for vectors that are not unit-norm."""
