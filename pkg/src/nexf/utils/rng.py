"""Named random substreams derived from a single run seed.

Every consumer of randomness (parameter init, ray sampling, stratified jitter,
regularizer noise, exposure assignment) draws from its own stream, so changing one
component never shifts the numbers another component sees.
"""

import base64
import zlib

import numpy as np
import torch

INIT = "init"
SAMPLING = "sampling"
JITTER = "jitter"
REG_NOISE = "reg-noise"
EXPOSURES = "exposures"
EVAL_POINTS = "eval-points"


def substream_seed(seed: int, name: str) -> int:
    """Derive a 63-bit seed for the substream ``name`` of ``seed``."""
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(zlib.crc32(name.encode()),))
    high, low = sequence.generate_state(2, dtype=np.uint32)
    return ((int(high) << 32) | int(low)) & 0x7FFF_FFFF_FFFF_FFFF


def torch_stream(seed: int, name: str) -> torch.Generator:
    """Seeded CPU torch generator for a named substream."""
    generator = torch.Generator(device="cpu")
    generator.manual_seed(substream_seed(seed, name))
    return generator


def numpy_stream(seed: int, name: str) -> np.random.Generator:
    """Seeded NumPy generator for a named substream."""
    return np.random.default_rng(substream_seed(seed, name))


def encode_state(generator: torch.Generator) -> str:
    """Serialize a torch generator state as base64 text."""
    return base64.b64encode(generator.get_state().numpy().tobytes()).decode("ascii")


def decode_state(generator: torch.Generator, state: str) -> torch.Generator:
    """Restore a generator from :func:`encode_state` output."""
    raw = np.frombuffer(base64.b64decode(state), dtype=np.uint8).copy()
    generator.set_state(torch.from_numpy(raw))
    return generator
