"""Dual-branch GAF signature encoder and its single-branch ablations."""

import logging
from collections.abc import Sequence

import numpy as np
import torch
from torch import nn

from src.config.enums import Fusion, Mode, Precision
from src.config.models import EncoderConfig
from src.exceptions import ShapeMismatchError
from src.model.layers import ConvStem, CrossAttentionBlock, ProjectionHead, SelfAttentionBlock

logger = logging.getLogger(__name__)

SUMMATION_CHANNELS = (0, 2, 4)
DIFFERENCE_CHANNELS = (1, 3, 5)

_DTYPES = {Precision.FLOAT64: torch.float64, Precision.FLOAT32: torch.float32}


def torch_dtype(precision: Precision) -> torch.dtype:
    return _DTYPES[precision]


class Branch(nn.Module):
    """Conv stem, token projection and self-attention layers of one image view."""

    def __init__(self, in_channels: int, config: EncoderConfig, *, dtype: torch.dtype) -> None:
        super().__init__()
        self.stem = ConvStem(in_channels, config.branch_channels, dtype=dtype)
        self.project = nn.Linear(config.backbone_channels, config.d, bias=False, dtype=dtype)
        self.blocks = nn.ModuleList(
            SelfAttentionBlock(config.d, config.heads, config.ffn_expansion, dtype=dtype)
            for _ in range(config.self_attn_layers)
        )
        self.norm = nn.LayerNorm(config.d, dtype=dtype)

    def tokens(self, x: torch.Tensor, pos: torch.Tensor) -> torch.Tensor:
        """(batch, n_tok, d) tokens after positional embedding and self-attention."""
        features = self.stem(x)
        h = self.project(features.flatten(2).transpose(1, 2)) + pos
        for block in self.blocks:
            h = block(h)
        return h

    def pool(self, h: torch.Tensor) -> torch.Tensor:
        return self.norm(h).mean(dim=1)


class SignatureEncoder(nn.Module):
    """Maps a batch of encoder images to unit-norm embeddings.

    Dual fusions route stack channels (0, 2, 4) to the summation branch and
    (1, 3, 5) to the difference branch; both share one positional embedding.
    Module creation order keeps every shared parameter identical between the
    cross-attention and concatenation variants built from the same seed.
    """

    def __init__(self, config: EncoderConfig) -> None:
        super().__init__()
        self.config = config
        dtype = torch_dtype(config.precision)
        self.dtype = dtype
        self.pos_embedding = nn.Parameter(
            torch.randn(config.n_tokens, config.d, dtype=dtype) * config.pos_embedding_std
        )
        branch_inputs = 1 if config.fusion.uses_trajectory else len(SUMMATION_CHANNELS)
        self.branches = nn.ModuleList(
            Branch(branch_inputs, config, dtype=dtype) for _ in range(config.branch_count)
        )
        self.head = ProjectionHead(
            config.pooled_width, config.d_z, momentum=config.bn_momentum, eps=config.bn_eps, dtype=dtype
        )
        self.cross = (
            CrossAttentionBlock(config.d, config.heads, config.ffn_expansion, dtype=dtype)
            if config.fusion is Fusion.CROSS_ATTENTION
            else None
        )

    def _views(self, images: torch.Tensor) -> list[torch.Tensor]:
        fusion = self.config.fusion
        if fusion.is_dual:
            return [images[:, list(SUMMATION_CHANNELS)], images[:, list(DIFFERENCE_CHANNELS)]]
        if fusion is Fusion.SINGLE_GASF:
            return [images[:, list(SUMMATION_CHANNELS)]]
        if fusion is Fusion.SINGLE_GADF:
            return [images[:, list(DIFFERENCE_CHANNELS)]]
        return [images]

    def check_input(self, images: torch.Tensor) -> None:
        expected = (self.config.fusion.input_channels, self.config.input_side, self.config.input_side)
        if images.ndim != 4 or tuple(images.shape[1:]) != expected:
            raise ShapeMismatchError(
                f"{self.config.fusion.value} encoder expects (batch, {', '.join(map(str, expected))}) "
                f"images, got {tuple(images.shape)}"
            )

    def pooled(self, images: torch.Tensor) -> torch.Tensor:
        """Concatenated post-norm average-pooled branch vectors, (batch, pooled_width)."""
        self.check_input(images)
        tokens = [
            branch.tokens(view, self.pos_embedding)
            for branch, view in zip(self.branches, self._views(images))
        ]
        if self.cross is not None:
            tokens = list(self.cross(tokens[0], tokens[1]))
        return torch.cat([branch.pool(h) for branch, h in zip(self.branches, tokens)], dim=-1)

    def forward(self, images: torch.Tensor) -> torch.Tensor:
        return self.head(self.pooled(images))

    def embed(self, images: torch.Tensor, mode: Mode = Mode.INFER) -> torch.Tensor:
        """Forward pass in ``mode``; INFER uses batch-norm running statistics."""
        self.train(mode is Mode.TRAIN)
        return self(images)


def build_encoder(config: EncoderConfig) -> SignatureEncoder:
    """Instantiate an encoder whose initial weights depend only on ``config``."""
    with torch.random.fork_rng(devices=[]):
        torch.manual_seed(config.seed)
        model = SignatureEncoder(config)
    logger.debug(
        f"Built {config.fusion.value} encoder with {parameter_count(model)} parameters (seed {config.seed})"
    )
    return model


def parameter_count(model: nn.Module) -> int:
    return sum(p.numel() for p in model.parameters())


def expected_parameter_count(config: EncoderConfig) -> int:
    """Analytic number of learnable scalars for ``config``.

    Per branch: stem, token projection, self-attention layers and final norm.
    Then the shared positional embedding, the cross-attention block (two
    directions) when present, and the projection head.
    """
    d, e = config.d, config.ffn_expansion
    c_in = 1 if config.fusion.uses_trajectory else len(SUMMATION_CHANNELS)
    stem = 0
    for c_out in config.branch_channels:
        stem += c_in * c_out * 9 + c_out
        c_in = c_out
    attention = 4 * d * d + d
    ffn = 2 * e * d * d + e * d + d
    self_layer = 2 * d + attention + 2 * d + ffn
    branch = stem + config.backbone_channels * d + config.self_attn_layers * self_layer + 2 * d

    total = config.branch_count * branch + config.n_tokens * d
    if config.fusion is Fusion.CROSS_ATTENTION:
        total += 2 * (3 * 2 * d + attention + ffn)
    w = config.pooled_width
    total += w * w + 2 * w + w * config.d_z + config.d_z
    return total


def images_to_tensor(images: Sequence[np.ndarray] | np.ndarray, dtype: torch.dtype) -> torch.Tensor:
    """Stack per-sample (C, H, H) arrays into one (batch, C, H, H) tensor."""
    return torch.as_tensor(np.stack([np.asarray(image) for image in images]), dtype=dtype)
