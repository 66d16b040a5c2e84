"""Reverse-mode gradients of scalar losses with respect to a ParamStore.

Differentiation is torch autograd over the flat parameter vector. With anomaly
detection on, :class:`GradTape` traces the forward pass and names the first
operation that turned finite inputs into a NaN or infinity; the backward pass is
checked by torch's anomaly mode, which names the producing backward function.
"""

import re
from collections.abc import Callable, Iterator, Sequence
from types import TracebackType
from typing import Any

import torch
from torch.overrides import TorchFunctionMode

from nexf.core.params import ParamStore
from nexf.exceptions import NonFiniteError

LossFn = Callable[[ParamStore], torch.Tensor]

_ANOMALY_OP = re.compile(r"Function '(\w+)' returned nan")


def _tensors(value: Any) -> Iterator[torch.Tensor]:
    if isinstance(value, torch.Tensor):
        yield value
    elif isinstance(value, list | tuple):
        for item in value:
            yield from _tensors(item)
    elif isinstance(value, dict):
        for item in value.values():
            yield from _tensors(item)


def _all_finite(value: Any) -> bool:
    return all(
        bool(torch.isfinite(t).all())
        for t in _tensors(value)
        if t.is_floating_point() or t.is_complex()
    )


class NonFiniteTracer(TorchFunctionMode):
    """Remembers the first torch operation whose output is non-finite while its inputs are not."""

    def __init__(self) -> None:
        super().__init__()
        self.operation: str | None = None

    def __torch_function__(
        self,
        func: Callable[..., Any],
        types: Sequence[type],
        args: tuple[Any, ...] = (),
        kwargs: dict[str, Any] | None = None,
    ) -> Any:
        kwargs = kwargs or {}
        if self.operation is not None:
            return func(*args, **kwargs)
        clean = _all_finite((args, kwargs))
        out = func(*args, **kwargs)
        if clean and not _all_finite(out):
            self.operation = getattr(func, "__name__", repr(func)).strip("_")
        return out


class GradTape:
    """Records one forward pass over a store and evaluates the adjoint of its loss."""

    def __init__(self, store: ParamStore, detect_anomaly: bool = True) -> None:
        """Initialize a tape over ``store``.

        Args:
            store: Parameters to differentiate with respect to.
            detect_anomaly: Trace forward and backward operations to name the source
                of a NaN. Tracing checks every intermediate and slows the pass down.
        """
        self.store = store
        self.detect_anomaly = detect_anomaly
        self._anomaly: torch.autograd.set_detect_anomaly | None = None
        self._tracer: NonFiniteTracer | None = None

    def __enter__(self) -> "GradTape":
        if not self.store.data.requires_grad:
            self.store.data.requires_grad_(True)
        self._anomaly = torch.autograd.set_detect_anomaly(self.detect_anomaly, check_nan=True)
        self._anomaly.__enter__()
        if self.detect_anomaly:
            self._tracer = NonFiniteTracer()
            self._tracer.__enter__()
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        self._stop_tracing()
        if self._anomaly is not None:
            self._anomaly.__exit__(exc_type, exc, tb)
            self._anomaly = None

    def _stop_tracing(self) -> str | None:
        tracer, self._tracer = self._tracer, None
        if tracer is None:
            return None
        tracer.__exit__(None, None, None)
        return tracer.operation

    def backward(self, loss: torch.Tensor) -> torch.Tensor:
        """Gradient of ``loss`` as a vector the length of the store.

        Ends forward tracing; a non-finite loss names the traced operation, or
        ``"forward"`` when the tape runs without anomaly detection.

        Raises:
            NonFiniteError: If the loss or any backward intermediate is not finite.
        """
        if loss.dim() != 0:
            raise ValueError("loss must be a scalar")
        operation = self._stop_tracing()
        if not torch.isfinite(loss):
            operation = operation or "forward"
            raise NonFiniteError(f"loss is not finite ({loss.item()}) after {operation}", operation=operation)
        if not loss.requires_grad:
            return torch.zeros_like(self.store.data)
        try:
            (gradient,) = torch.autograd.grad(loss, self.store.data, allow_unused=True)
        except RuntimeError as e:
            match = _ANOMALY_OP.search(str(e))
            operation = match.group(1) if match else "backward"
            raise NonFiniteError(f"non-finite gradient in {operation}", operation=operation) from e
        if gradient is None:
            return torch.zeros_like(self.store.data)
        if not torch.isfinite(gradient).all():
            raise NonFiniteError("non-finite gradient", operation="backward")
        return gradient


def grad(loss_fn: LossFn, store: ParamStore) -> torch.Tensor:
    """Evaluate ``loss_fn(store)`` and return its gradient vector.

    Args:
        loss_fn: Scalar function of the parameters.
        store: Parameter store; its vector is marked as requiring gradients.

    Returns:
        Gradient with the same length as the store.
    """
    with GradTape(store) as tape:
        return tape.backward(loss_fn(store))


def finite_difference(
    loss_fn: LossFn, store: ParamStore, indices: Sequence[int], step: float = 1e-5
) -> torch.Tensor:
    """Central finite differences of ``loss_fn`` at selected coordinates."""
    base = store.data.detach()
    estimates = torch.empty(len(indices), dtype=base.dtype)
    with torch.no_grad():
        for k, index in enumerate(indices):
            plus = base.clone()
            plus[index] += step
            minus = base.clone()
            minus[index] -= step
            high = loss_fn(store.with_data(plus))
            low = loss_fn(store.with_data(minus))
            estimates[k] = (high - low) / (2.0 * step)
    return estimates


def relative_error(analytic: torch.Tensor, numeric: torch.Tensor, floor: float = 1e-8) -> float:
    """Max of |a - n| / max(|a|, |n|, floor) over coordinates.

    The floor only guards exact zeros; values near it are compared relatively.
    """
    scale = torch.maximum(torch.maximum(analytic.abs(), numeric.abs()), torch.tensor(floor))
    return float(((analytic - numeric).abs() / scale).max()) if analytic.numel() else 0.0
