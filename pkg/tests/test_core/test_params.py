"""Tests for the flat parameter store."""

import pytest
import torch

from nexf.core.params import DTYPE, ParamStore, Segment, check_finite
from nexf.exceptions import CheckpointFormatError, DimensionMismatchError


class TestParamStore:
    """Test segment layout and views."""

    def test_segments_tile_vector_in_order(self) -> None:
        """Segments are laid out back to back."""
        store = ParamStore.from_shapes([("a", (2, 3)), ("b", (4,)), ("c", ())])

        assert len(store) == 11
        assert store.segments["a"] == Segment(0, (2, 3))
        assert store.segments["b"] == Segment(6, (4,))
        assert store.segments["c"].size == 1
        assert store.data.dtype == DTYPE

    def test_getitem_is_view_into_data(self) -> None:
        """Writing through the flat vector is visible in the segment view."""
        store = ParamStore.from_shapes([("a", (2, 2)), ("b", (3,))], requires_grad=False)
        store.data[4:] = torch.tensor([1.0, 2.0, 3.0], dtype=DTYPE)

        assert store["b"].tolist() == [1.0, 2.0, 3.0]
        assert store["a"].shape == (2, 2)

    def test_assign_overwrites_segment(self) -> None:
        """assign copies values into one segment only."""
        store = ParamStore.from_shapes([("a", (2,)), ("b", (2,))])
        store.assign("b", torch.tensor([5.0, 6.0]))

        assert store.data.tolist() == [0.0, 0.0, 5.0, 6.0]

    def test_mask_selects_prefix(self) -> None:
        """mask covers exactly the segments under a prefix."""
        store = ParamStore.from_shapes([("net.0.weight", (2,)), ("net.0.bias", (1,)), ("other", (3,))])

        assert store.mask("net.").tolist() == [True, True, True, False, False, False]
        assert store.names("net.") == ["net.0.weight", "net.0.bias"]

    def test_duplicate_name_rejected(self) -> None:
        """Segment names are unique."""
        with pytest.raises(ValueError, match="duplicate"):
            ParamStore.from_shapes([("a", (1,)), ("a", (2,))])

    def test_gap_in_layout_rejected(self) -> None:
        """A segment table must cover the vector without gaps."""
        with pytest.raises(DimensionMismatchError):
            ParamStore(torch.zeros(5, dtype=DTYPE), {"a": Segment(0, (2,)), "b": Segment(3, (2,))})

    def test_short_vector_rejected(self) -> None:
        """A segment table must cover the whole vector."""
        with pytest.raises(DimensionMismatchError):
            ParamStore(torch.zeros(5, dtype=DTYPE), {"a": Segment(0, (2,))})

    def test_clone_is_independent(self) -> None:
        """clone copies the vector."""
        store = ParamStore.from_shapes([("a", (2,))], requires_grad=False)
        copy = store.clone()
        copy.data[0] = 1.0

        assert store.data[0] == 0.0

    def test_check_finite(self) -> None:
        """Non-finite parameters are rejected."""
        store = ParamStore.from_shapes([("a", (2,))], requires_grad=False)
        check_finite(store)
        store.data[1] = float("nan")

        with pytest.raises(CheckpointFormatError):
            check_finite(store)
