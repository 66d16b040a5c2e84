"""Versioned binary container for parameter vectors.

Layout (all integers little-endian)::

    b"NEXF" | u32 version
    u32 metadata length | metadata (UTF-8 JSON, sorted keys)
    u32 segment count | per segment: u16 name length, name, u64 offset, u8 rank, u64 dims...
    u64 value count | float64 values
    u64 optimizer value count (0 or 2N) | float64 first moments, then second moments
    u64 optimizer step
"""

import json
import struct
from dataclasses import dataclass
from io import BytesIO
from typing import Any, BinaryIO

import numpy as np
import torch

from nexf.core.params import DTYPE, ParamStore, Segment, check_finite
from nexf.exceptions import CheckpointFormatError

MAGIC = b"NEXF"
FORMAT_VERSION = 1


@dataclass
class OptimizerMoments:
    """Adam state of the flat parameter vector."""

    exp_avg: torch.Tensor
    exp_avg_sq: torch.Tensor
    step: int


def _read_exact(stream: BinaryIO, size: int) -> bytes:
    chunk = stream.read(size)
    if len(chunk) != size:
        raise CheckpointFormatError("unexpected end of checkpoint")
    return chunk


def _unpack(stream: BinaryIO, fmt: str) -> tuple[Any, ...]:
    return struct.unpack(fmt, _read_exact(stream, struct.calcsize(fmt)))


def _floats(values: torch.Tensor) -> bytes:
    return values.detach().cpu().numpy().astype("<f8").tobytes()


def encode(
    store: ParamStore, metadata: dict[str, Any], moments: OptimizerMoments | None = None
) -> bytes:
    """Serialize a parameter store, its metadata and optional Adam moments."""
    out = BytesIO()
    out.write(MAGIC)
    out.write(struct.pack("<I", FORMAT_VERSION))

    meta = json.dumps(metadata, sort_keys=True, separators=(",", ":")).encode("utf-8")
    out.write(struct.pack("<I", len(meta)))
    out.write(meta)

    out.write(struct.pack("<I", len(store.segments)))
    for name, segment in store.segments.items():
        encoded = name.encode("utf-8")
        out.write(struct.pack("<H", len(encoded)))
        out.write(encoded)
        out.write(struct.pack("<QB", segment.offset, len(segment.shape)))
        out.write(struct.pack(f"<{len(segment.shape)}Q", *segment.shape))

    out.write(struct.pack("<Q", len(store)))
    out.write(_floats(store.data))

    if moments is None:
        out.write(struct.pack("<Q", 0))
        out.write(struct.pack("<Q", 0))
    else:
        out.write(struct.pack("<Q", 2 * len(store)))
        out.write(_floats(moments.exp_avg))
        out.write(_floats(moments.exp_avg_sq))
        out.write(struct.pack("<Q", moments.step))
    return out.getvalue()


def decode(payload: bytes) -> tuple[ParamStore, dict[str, Any], OptimizerMoments | None]:
    """Inverse of :func:`encode`.

    Raises:
        CheckpointFormatError: On bad magic, unsupported version, truncation or
            non-finite parameters.
    """
    stream = BytesIO(payload)
    if _read_exact(stream, 4) != MAGIC:
        raise CheckpointFormatError("not a NEXF checkpoint (bad magic)")
    (version,) = _unpack(stream, "<I")
    if version != FORMAT_VERSION:
        raise CheckpointFormatError(f"unsupported checkpoint version {version}")

    (meta_len,) = _unpack(stream, "<I")
    try:
        metadata = json.loads(_read_exact(stream, meta_len).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise CheckpointFormatError(f"corrupt checkpoint metadata: {e}") from e

    (count,) = _unpack(stream, "<I")
    segments: dict[str, Segment] = {}
    for _ in range(count):
        (name_len,) = _unpack(stream, "<H")
        name = _read_exact(stream, name_len).decode("utf-8")
        offset, rank = _unpack(stream, "<QB")
        shape = _unpack(stream, f"<{rank}Q") if rank else ()
        segments[name] = Segment(int(offset), tuple(int(s) for s in shape))

    (num_values,) = _unpack(stream, "<Q")
    values = np.frombuffer(_read_exact(stream, 8 * num_values), dtype="<f8").astype(np.float64)
    try:
        store = ParamStore(torch.from_numpy(values.copy()).to(DTYPE), segments)
    except Exception as e:
        raise CheckpointFormatError(f"inconsistent segment table: {e}") from e
    check_finite(store)

    (num_moments,) = _unpack(stream, "<Q")
    moments: OptimizerMoments | None = None
    if num_moments:
        if num_moments != 2 * num_values:
            raise CheckpointFormatError("optimizer state does not match parameter count")
        raw = np.frombuffer(_read_exact(stream, 8 * num_moments), dtype="<f8").astype(np.float64)
        (step,) = _unpack(stream, "<Q")
        moments = OptimizerMoments(
            exp_avg=torch.from_numpy(raw[:num_values].copy()),
            exp_avg_sq=torch.from_numpy(raw[num_values:].copy()),
            step=int(step),
        )
    else:
        _unpack(stream, "<Q")
    return store, metadata, moments
