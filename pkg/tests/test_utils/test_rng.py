"""Tests for named random substreams."""

import torch

from nexf.utils.rng import INIT, SAMPLING, decode_state, encode_state, numpy_stream, substream_seed, torch_stream


class TestSubstreams:
    """Tests for seed derivation."""

    def test_stable_and_distinct(self) -> None:
        """A (seed, name) pair always maps to the same seed; names and seeds differ."""
        assert substream_seed(0, INIT) == substream_seed(0, INIT)
        assert substream_seed(0, INIT) != substream_seed(0, SAMPLING)
        assert substream_seed(0, INIT) != substream_seed(1, INIT)

    def test_seed_is_nonnegative_63_bit(self) -> None:
        """Derived seeds fit torch's manual_seed range."""
        for seed in range(20):
            assert 0 <= substream_seed(seed, SAMPLING) < 2**63

    def test_streams_reproduce(self) -> None:
        """Two generators of the same substream draw the same numbers."""
        a = torch.rand(5, generator=torch_stream(4, SAMPLING), dtype=torch.float64)
        b = torch.rand(5, generator=torch_stream(4, SAMPLING), dtype=torch.float64)

        assert torch.equal(a, b)
        assert numpy_stream(4, SAMPLING).random() == numpy_stream(4, SAMPLING).random()


class TestGeneratorState:
    """Tests for generator state encoding."""

    def test_restored_generator_continues_sequence(self) -> None:
        """A decoded state resumes exactly where the encoded generator stopped."""
        generator = torch_stream(2, SAMPLING)
        torch.rand(3, generator=generator)
        state = encode_state(generator)
        expected = torch.rand(4, generator=generator)

        restored = decode_state(torch.Generator(), state)

        assert torch.equal(torch.rand(4, generator=restored), expected)
