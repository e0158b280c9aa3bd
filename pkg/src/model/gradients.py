"""Reverse-mode gradients with non-finite diagnostics, plus a finite-difference checker."""

import logging
import math
from collections.abc import Callable

import numpy as np
import torch
from torch import nn

from src.exceptions import NonFiniteLossError

logger = logging.getLogger(__name__)

LossClosure = Callable[[], torch.Tensor]

GRADIENT_FLOOR = 1e-6


def _first_non_finite(output: object) -> bool:
    tensors = output if isinstance(output, tuple | list) else (output,)
    return any(isinstance(t, torch.Tensor) and not bool(torch.isfinite(t).all()) for t in tensors)


def locate_non_finite(model: nn.Module, closure: LossClosure) -> str:
    """Re-run ``closure`` and return the path of the first module emitting NaN/inf.

    Buffers (batch-norm statistics) are restored afterwards. Returns ``"loss"``
    when every module output is finite.
    """
    found: list[str] = []
    snapshot = {name: buf.clone() for name, buf in model.named_buffers()}

    def make_hook(path: str) -> Callable[..., None]:
        def hook(_module: nn.Module, _inputs: object, output: object) -> None:
            if not found and _first_non_finite(output):
                found.append(path)

        return hook

    handles = [
        module.register_forward_hook(make_hook(path)) for path, module in model.named_modules() if path
    ]
    try:
        with torch.no_grad():
            closure()
    finally:
        for handle in handles:
            handle.remove()
        with torch.no_grad():
            for name, buf in model.named_buffers():
                buf.copy_(snapshot[name])
    return found[0] if found else "loss"


def grad(model: nn.Module, closure: LossClosure) -> tuple[torch.Tensor, dict[str, torch.Tensor]]:
    """Evaluate ``closure`` and return (loss, gradient per named parameter).

    Parameters the loss does not depend on get zero gradients.

    Raises:
        NonFiniteLossError: If the loss is NaN or infinite
    """
    named = [(name, p) for name, p in model.named_parameters() if p.requires_grad]
    loss = closure()
    if not bool(torch.isfinite(loss)):
        path = locate_non_finite(model, closure)
        raise NonFiniteLossError(path, float(loss.detach()))
    grads = torch.autograd.grad(loss, [p for _, p in named], allow_unused=True)
    return loss.detach(), {
        name: torch.zeros_like(p) if g is None else g for (name, p), g in zip(named, grads)
    }


def finite_difference_check(
    model: nn.Module,
    closure: LossClosure,
    coordinates: int = 200,
    step: float = 1e-5,
    seed: int = 0,
) -> float:
    """Largest relative error between analytic and central-difference gradients.

    ``coordinates`` scalar parameters are drawn without replacement; the error
    of one coordinate is |a - n| / max(|a|, |n|, GRADIENT_FLOOR). ``closure``
    must be deterministic (freeze any selection it makes).
    """
    _, analytic = grad(model, closure)
    params = dict(model.named_parameters())
    names = list(analytic)
    sizes = np.array([params[name].numel() for name in names])
    offsets = np.concatenate([[0], np.cumsum(sizes)])
    rng = np.random.default_rng(seed)
    picks = rng.choice(int(offsets[-1]), size=min(coordinates, int(offsets[-1])), replace=False)

    worst = 0.0
    with torch.no_grad():
        for flat_index in np.sort(picks):
            which = int(np.searchsorted(offsets, flat_index, side="right") - 1)
            name = names[which]
            view = params[name].view(-1)
            local = int(flat_index - offsets[which])
            original = view[local].item()

            view[local] = original + step
            plus = float(closure())
            view[local] = original - step
            minus = float(closure())
            view[local] = original

            numeric = (plus - minus) / (2 * step)
            exact = float(analytic[name].reshape(-1)[local])
            error = abs(exact - numeric) / max(abs(exact), abs(numeric), GRADIENT_FLOOR)
            if not math.isfinite(error):
                error = math.inf
            if error > worst:
                logger.debug(f"{name}[{local}]: analytic {exact:.6e}, numeric {numeric:.6e}")
            worst = max(worst, error)
    return worst
