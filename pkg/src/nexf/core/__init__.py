"""Numerical substrate: parameter store, networks, gradients and optimizer."""

from nexf.core.autodiff import GradTape, finite_difference, grad, relative_error
from nexf.core.codec import FORMAT_VERSION, MAGIC, OptimizerMoments, decode, encode
from nexf.core.mlp import init_mlp, mlp_forward, mlp_shapes, posenc
from nexf.core.optim import adam_step, learning_rate, make_optimizer
from nexf.core.params import DTYPE, ParamStore, Segment

__all__ = [
    "DTYPE",
    "ParamStore",
    "Segment",
    "posenc",
    "mlp_shapes",
    "init_mlp",
    "mlp_forward",
    "GradTape",
    "grad",
    "finite_difference",
    "relative_error",
    "make_optimizer",
    "adam_step",
    "learning_rate",
    "OptimizerMoments",
    "encode",
    "decode",
    "MAGIC",
    "FORMAT_VERSION",
]
