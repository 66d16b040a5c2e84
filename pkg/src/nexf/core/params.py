"""Flat parameter vector with named, typed segments."""

import math
from collections.abc import Iterable, Iterator, Mapping
from typing import NamedTuple

import torch

from nexf.exceptions import CheckpointFormatError, DimensionMismatchError

DTYPE = torch.float64


class Segment(NamedTuple):
    """Location of one named tensor inside the flat vector."""

    offset: int
    shape: tuple[int, ...]

    @property
    def size(self) -> int:
        """Number of scalars in the segment."""
        return math.prod(self.shape)

    @property
    def stop(self) -> int:
        """End offset (exclusive)."""
        return self.offset + self.size


class ParamStore:
    """One float64 vector holding every trainable parameter.

    Segments are laid out back to back in insertion order, so they are disjoint and
    cover the vector exactly. ``store[name]`` returns a view into ``data``; gradients of
    anything computed from views accumulate on the single flat tensor.
    """

    def __init__(self, data: torch.Tensor, segments: Mapping[str, Segment]) -> None:
        """Initialize a store over an existing vector.

        Args:
            data: Flat float64 vector.
            segments: Segment table; must tile ``data`` exactly.
        """
        self.data = data
        self.segments: dict[str, Segment] = dict(segments)
        self._check_layout()

    @classmethod
    def from_shapes(
        cls, shapes: Iterable[tuple[str, tuple[int, ...]]], requires_grad: bool = True
    ) -> "ParamStore":
        """Allocate a zero vector with one segment per (name, shape), in order."""
        segments: dict[str, Segment] = {}
        offset = 0
        for name, shape in shapes:
            if name in segments:
                raise ValueError(f"duplicate segment name: {name}")
            segment = Segment(offset, tuple(int(s) for s in shape))
            segments[name] = segment
            offset = segment.stop
        data = torch.zeros(offset, dtype=DTYPE, requires_grad=requires_grad)
        return cls(data, segments)

    def _check_layout(self) -> None:
        if self.data.dim() != 1:
            raise DimensionMismatchError("parameter data must be a flat vector")
        expected = 0
        for name, segment in sorted(self.segments.items(), key=lambda item: item[1].offset):
            if segment.offset != expected:
                raise DimensionMismatchError(f"segment {name} leaves a gap or overlaps")
            expected = segment.stop
        if expected != self.data.numel():
            raise DimensionMismatchError(
                f"segments cover {expected} values but vector has {self.data.numel()}"
            )

    def __getitem__(self, name: str) -> torch.Tensor:
        segment = self.segments[name]
        return self.data[segment.offset : segment.stop].view(segment.shape)

    def __contains__(self, name: object) -> bool:
        return name in self.segments

    def __iter__(self) -> Iterator[str]:
        return iter(self.segments)

    def __len__(self) -> int:
        return self.data.numel()

    def names(self, prefix: str = "") -> list[str]:
        """Segment names starting with ``prefix``."""
        return [name for name in self.segments if name.startswith(prefix)]

    def mask(self, prefix: str) -> torch.Tensor:
        """Boolean vector selecting every coordinate of segments under ``prefix``."""
        selected = torch.zeros(len(self), dtype=torch.bool)
        for name in self.names(prefix):
            segment = self.segments[name]
            selected[segment.offset : segment.stop] = True
        return selected

    def is_finite(self) -> bool:
        """Whether every parameter is finite."""
        return bool(torch.isfinite(self.data).all())

    def assign(self, name: str, value: torch.Tensor) -> None:
        """Overwrite a segment in place (outside of autograd)."""
        with torch.no_grad():
            self[name].copy_(value.to(DTYPE))

    def clone(self, requires_grad: bool | None = None) -> "ParamStore":
        """Deep copy with an independent vector."""
        grad = self.data.requires_grad if requires_grad is None else requires_grad
        data = self.data.detach().clone().requires_grad_(grad)
        return ParamStore(data, self.segments)

    def with_data(self, data: torch.Tensor) -> "ParamStore":
        """Same layout over another vector (e.g. a perturbed copy)."""
        return ParamStore(data, self.segments)


def check_finite(store: ParamStore) -> None:
    """Raise if the store holds NaN or infinite values."""
    if not store.is_finite():
        raise CheckpointFormatError("parameter vector contains non-finite values")
