"""Adam over the flat parameter vector and the warmup + cosine learning-rate schedule."""

import math

import torch

from nexf.core.codec import OptimizerMoments
from nexf.core.params import ParamStore
from nexf.exceptions import NonFiniteError


def make_optimizer(
    store: ParamStore,
    lr: float,
    betas: tuple[float, float] = (0.9, 0.999),
    eps: float = 1e-8,
) -> torch.optim.Adam:
    """Bias-corrected Adam over the store's single vector."""
    if not store.data.requires_grad:
        store.data.requires_grad_(True)
    return torch.optim.Adam([store.data], lr=lr, betas=betas, eps=eps)


def adam_step(
    optimizer: torch.optim.Adam, store: ParamStore, grads: torch.Tensor, lr: float | None = None
) -> None:
    """Apply one Adam update with an explicit gradient vector.

    Args:
        optimizer: Optimizer created by :func:`make_optimizer` for ``store``.
        store: Parameters updated in place.
        grads: Gradient vector, same length as the store.
        lr: Learning rate for this step; keeps the optimizer's current rate when None.

    Raises:
        NonFiniteError: If ``grads`` holds NaN or infinity.
    """
    if not torch.isfinite(grads).all():
        raise NonFiniteError("gradient is not finite", operation="adam_step")
    if lr is not None:
        for group in optimizer.param_groups:
            group["lr"] = lr
    store.data.grad = grads.detach().clone()
    optimizer.step()
    store.data.grad = None


def learning_rate(step: int, total: int, lr_init: float, lr_final: float, warmup: int) -> float:
    """Linear warmup to ``lr_init`` then cosine decay to ``lr_final`` at ``total``."""
    if warmup > 0 and step < warmup:
        return lr_init * (step + 1) / warmup
    span = max(total - warmup, 1)
    progress = min(max(step - warmup, 0) / span, 1.0)
    return lr_final + 0.5 * (lr_init - lr_final) * (1.0 + math.cos(math.pi * progress))


def export_moments(optimizer: torch.optim.Adam, store: ParamStore) -> OptimizerMoments | None:
    """Adam moments of the store vector, or None before the first step."""
    state = optimizer.state.get(store.data)
    if not state:
        return None
    return OptimizerMoments(
        exp_avg=state["exp_avg"].detach().clone(),
        exp_avg_sq=state["exp_avg_sq"].detach().clone(),
        step=int(state["step"]),
    )


def import_moments(optimizer: torch.optim.Adam, store: ParamStore, moments: OptimizerMoments) -> None:
    """Restore moments written by :func:`export_moments`."""
    optimizer.state[store.data] = {
        "step": torch.tensor(float(moments.step), dtype=torch.float32),
        "exp_avg": moments.exp_avg.clone().to(store.data.dtype),
        "exp_avg_sq": moments.exp_avg_sq.clone().to(store.data.dtype),
    }
