"""Positional encoding and fully-connected networks over ParamStore segments."""

import math

import torch
import torch.nn.functional as F

from nexf.core.params import DTYPE, ParamStore
from nexf.exceptions import DimensionMismatchError
from nexf.models.config import MLPSpec

_OUTPUT_ACTIVATIONS = {
    "none": lambda h: h,
    "sigmoid": torch.sigmoid,
    "softplus": F.softplus,
    "exp": torch.exp,
}


def posenc(x: torch.Tensor, num_freqs: int) -> torch.Tensor:
    """Frequency encoding (x, sin(2^k pi x), cos(2^k pi x)) for k < num_freqs.

    Args:
        x: Tensor (..., 3).
        num_freqs: Number of frequency bands L >= 0.

    Returns:
        Tensor (..., 3 + 6L).
    """
    if num_freqs < 0:
        raise ValueError("num_freqs must be >= 0")
    features = [x]
    for k in range(num_freqs):
        scaled = (2.0**k * math.pi) * x
        features.append(torch.sin(scaled))
        features.append(torch.cos(scaled))
    return torch.cat(features, dim=-1)


def mlp_shapes(prefix: str, spec: MLPSpec) -> list[tuple[str, tuple[int, ...]]]:
    """Segment names and shapes of a network, in layout order."""
    shapes: list[tuple[str, tuple[int, ...]]] = []
    for layer in range(spec.num_layers):
        fan_out = spec.widths[layer + 1]
        shapes.append((f"{prefix}.{layer}.weight", (fan_out, spec.fan_in(layer))))
        shapes.append((f"{prefix}.{layer}.bias", (fan_out,)))
    return shapes


def init_mlp(store: ParamStore, prefix: str, spec: MLPSpec, generator: torch.Generator) -> None:
    """He-style fan-in initialization, zero biases.

    Hidden layers draw N(0, 2/fan_in) for ReLU; the output layer draws N(0, 1/fan_in).
    """
    for layer in range(spec.num_layers):
        weight = store[f"{prefix}.{layer}.weight"]
        fan_in = weight.shape[1]
        gain = 1.0 if layer == spec.num_layers - 1 else 2.0
        values = torch.randn(weight.shape, generator=generator, dtype=DTYPE) * math.sqrt(gain / fan_in)
        store.assign(f"{prefix}.{layer}.weight", values)
        store.assign(f"{prefix}.{layer}.bias", torch.zeros(weight.shape[0], dtype=DTYPE))


def mlp_forward(
    store: ParamStore, prefix: str, spec: MLPSpec, inputs: torch.Tensor
) -> torch.Tensor:
    """Affine + ReLU stack ending in ``spec.output_activation``.

    Args:
        store: Parameter store holding ``{prefix}.{k}.weight|bias``.
        prefix: Segment prefix of the network.
        spec: Network shape.
        inputs: Tensor (..., in_dim).

    Returns:
        Tensor (..., out_dim).

    Raises:
        DimensionMismatchError: If the input width does not match the first layer.
    """
    if inputs.shape[-1] != spec.in_dim:
        raise DimensionMismatchError(
            f"{prefix}: expected input width {spec.in_dim}, got {inputs.shape[-1]}"
        )
    h = inputs
    for layer in range(spec.num_layers):
        if layer in spec.skip_layers:
            h = torch.cat([h, inputs], dim=-1)
        h = F.linear(h, store[f"{prefix}.{layer}.weight"], store[f"{prefix}.{layer}.bias"])
        if layer < spec.num_layers - 1:
            h = F.relu(h)
    return _OUTPUT_ACTIVATIONS[spec.output_activation](h)
