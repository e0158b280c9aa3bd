"""Building blocks of the signature encoder."""

import torch
import torch.nn.functional as F
from torch import nn

from src.exceptions import DegenerateEmbeddingError, ShapeMismatchError


class ConvStem(nn.Module):
    """Stride-2 3x3 convolutions with GELU, one per configured stage."""

    def __init__(self, in_channels: int, stage_channels: tuple[int, ...], *, dtype: torch.dtype) -> None:
        super().__init__()
        layers: list[nn.Module] = []
        c_in = in_channels
        for c_out in stage_channels:
            layers.append(nn.Conv2d(c_in, c_out, kernel_size=3, stride=2, padding=1, dtype=dtype))
            layers.append(nn.GELU())
            c_in = c_out
        self.stages = nn.Sequential(*layers)
        self.downsample = 2 ** len(stage_channels)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        side = x.shape[-1]
        if x.shape[-2] != side or side % self.downsample:
            raise ShapeMismatchError(
                f"stem input must be square with side divisible by {self.downsample}, got {tuple(x.shape[-2:])}"
            )
        return self.stages(x)


class MultiHeadAttention(nn.Module):
    """Scaled dot-product attention over ``heads`` subspaces of width d / heads.

    Query, key and value projections carry no bias; the output projection does.
    """

    def __init__(self, d: int, heads: int, *, dtype: torch.dtype) -> None:
        super().__init__()
        if d % heads:
            raise ShapeMismatchError(f"token width {d} is not divisible by {heads} heads")
        self.d = d
        self.heads = heads
        self.head_dim = d // heads
        self.to_query = nn.Linear(d, d, bias=False, dtype=dtype)
        self.to_key = nn.Linear(d, d, bias=False, dtype=dtype)
        self.to_value = nn.Linear(d, d, bias=False, dtype=dtype)
        self.to_out = nn.Linear(d, d, dtype=dtype)

    def _split(self, t: torch.Tensor) -> torch.Tensor:
        return t.view(t.shape[0], t.shape[1], self.heads, self.head_dim).transpose(1, 2)

    def attention_weights(self, query: torch.Tensor, key: torch.Tensor) -> torch.Tensor:
        """(batch, heads, n_query, n_key) softmax weights; each row sums to 1."""
        q, k = self._split(self.to_query(query)), self._split(self.to_key(key))
        scores = torch.matmul(q, k.transpose(-1, -2)) / self.head_dim**0.5
        return F.softmax(scores, dim=-1)

    def forward(self, query: torch.Tensor, key: torch.Tensor, value: torch.Tensor) -> torch.Tensor:
        weights = self.attention_weights(query, key)
        v = self._split(self.to_value(value))
        out = torch.matmul(weights, v).transpose(1, 2).reshape(query.shape[0], query.shape[1], self.d)
        return self.to_out(out)


class FeedForward(nn.Sequential):
    def __init__(self, d: int, expansion: int, *, dtype: torch.dtype) -> None:
        super().__init__(
            nn.Linear(d, expansion * d, dtype=dtype),
            nn.GELU(),
            nn.Linear(expansion * d, d, dtype=dtype),
        )


class SelfAttentionBlock(nn.Module):
    """Pre-norm residual self-attention followed by a residual feed-forward sublayer."""

    def __init__(self, d: int, heads: int, expansion: int, *, dtype: torch.dtype) -> None:
        super().__init__()
        self.attn_norm = nn.LayerNorm(d, dtype=dtype)
        self.attn = MultiHeadAttention(d, heads, dtype=dtype)
        self.ffn_norm = nn.LayerNorm(d, dtype=dtype)
        self.ffn = FeedForward(d, expansion, dtype=dtype)

    def forward(self, h: torch.Tensor) -> torch.Tensor:
        normed = self.attn_norm(h)
        h = h + self.attn(normed, normed, normed)
        return h + self.ffn(self.ffn_norm(h))


class CrossAttentionDirection(nn.Module):
    """One direction of the exchange: queries from one branch, keys/values from the other."""

    def __init__(self, d: int, heads: int, expansion: int, *, dtype: torch.dtype) -> None:
        super().__init__()
        self.query_norm = nn.LayerNorm(d, dtype=dtype)
        self.context_norm = nn.LayerNorm(d, dtype=dtype)
        self.attn = MultiHeadAttention(d, heads, dtype=dtype)
        self.ffn_norm = nn.LayerNorm(d, dtype=dtype)
        self.ffn = FeedForward(d, expansion, dtype=dtype)

    def forward(self, h: torch.Tensor, context: torch.Tensor) -> torch.Tensor:
        ctx = self.context_norm(context)
        h = h + self.attn(self.query_norm(h), ctx, ctx)
        return h + self.ffn(self.ffn_norm(h))


class CrossAttentionBlock(nn.Module):
    """Bidirectional exchange between the GASF and GADF token sets.

    Both directions read the pre-update tokens, so the two updates commute.
    Each direction owns its attention and feed-forward weights.
    """

    def __init__(self, d: int, heads: int, expansion: int, *, dtype: torch.dtype) -> None:
        super().__init__()
        self.summation = CrossAttentionDirection(d, heads, expansion, dtype=dtype)
        self.difference = CrossAttentionDirection(d, heads, expansion, dtype=dtype)

    def forward(self, h_s: torch.Tensor, h_d: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        return self.summation(h_s, h_d), self.difference(h_d, h_s)


def l2_normalize(z: torch.Tensor) -> torch.Tensor:
    """Row-wise unit normalisation.

    Raises:
        DegenerateEmbeddingError: If any row has zero norm
    """
    norms = torch.linalg.vector_norm(z, dim=-1, keepdim=True)
    if bool((norms == 0).any()):
        raise DegenerateEmbeddingError("projection produced a zero vector; embedding is undefined")
    return z / norms


class ProjectionHead(nn.Module):
    """z = normalize(f2(ReLU(BN(f1(v))))), f1 without bias."""

    def __init__(self, width: int, d_z: int, *, momentum: float, eps: float, dtype: torch.dtype) -> None:
        super().__init__()
        self.f1 = nn.Linear(width, width, bias=False, dtype=dtype)
        self.bn = nn.BatchNorm1d(width, eps=eps, momentum=momentum, dtype=dtype)
        self.f2 = nn.Linear(width, d_z, dtype=dtype)

    def forward(self, v: torch.Tensor) -> torch.Tensor:
        return l2_normalize(self.f2(F.relu(self.bn(self.f1(v)))))
