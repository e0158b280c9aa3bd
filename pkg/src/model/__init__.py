"""Embedding network, gradients and checkpoints."""

from src.model.layers import (
    ConvStem,
    CrossAttentionBlock,
    MultiHeadAttention,
    ProjectionHead,
    SelfAttentionBlock,
    l2_normalize,
)
from src.model.encoder import (
    DIFFERENCE_CHANNELS,
    SUMMATION_CHANNELS,
    SignatureEncoder,
    build_encoder,
    expected_parameter_count,
    images_to_tensor,
    parameter_count,
    torch_dtype,
)
from src.model.gradients import finite_difference_check, grad, locate_non_finite
from src.model.checkpoint import Checkpoint, read_checkpoint, write_checkpoint

__all__ = [
    "ConvStem",
    "CrossAttentionBlock",
    "MultiHeadAttention",
    "ProjectionHead",
    "SelfAttentionBlock",
    "l2_normalize",
    "DIFFERENCE_CHANNELS",
    "SUMMATION_CHANNELS",
    "SignatureEncoder",
    "build_encoder",
    "expected_parameter_count",
    "images_to_tensor",
    "parameter_count",
    "torch_dtype",
    "finite_difference_check",
    "grad",
    "locate_non_finite",
    "Checkpoint",
    "read_checkpoint",
    "write_checkpoint",
]
