"""Tests for the photometric and exposure losses."""

import pytest
import torch

from nexf.exceptions import DimensionMismatchError
from nexf.models import WeightConfig
from nexf.objectives.losses import exposure_loss, photometric_loss, weighted_exposure_loss


def tensor(values: list[float] | list[list[float]]) -> torch.Tensor:
    """Float64 tensor."""
    return torch.tensor(values, dtype=torch.float64)


class TestPhotometricLoss:
    """Test the summed squared color error."""

    def test_identical(self) -> None:
        """Equal batches have zero loss."""
        colors = torch.rand(8, 3, dtype=torch.float64)

        assert photometric_loss(colors, colors.clone()).item() == 0.0

    def test_single_ray(self) -> None:
        """An error of 0.1 in one channel costs 0.01."""
        loss = photometric_loss(tensor([[0.6, 0.2, 0.2]]), tensor([[0.5, 0.2, 0.2]]))

        assert loss.item() == pytest.approx(0.01, abs=1e-15)

    def test_shape_mismatch(self) -> None:
        """Mismatched shapes are rejected."""
        with pytest.raises(DimensionMismatchError):
            photometric_loss(torch.zeros(4, 3), torch.zeros(3, 3))


class TestExposureLoss:
    """Test the weighted exposure loss with its smoothness term."""

    def test_weighted_closed_form(self) -> None:
        """w = 0.5, Δt̂ = 1.5, Δt = 1, reg = 0.02 gives 0.145."""
        loss = weighted_exposure_loss(tensor([1.5]), tensor([1.0]), tensor([0.5]), tensor([0.02]))

        assert loss.item() == pytest.approx(0.145, abs=1e-15)

    def test_perfect_prediction(self) -> None:
        """Exact predictions with no variation cost nothing."""
        colors = torch.rand(6, 3, dtype=torch.float64)
        exposures = tensor([0.5, 1.0, 2.0, 0.25, 1.0, 1.0])

        assert exposure_loss(exposures, exposures, colors, torch.zeros(6, dtype=torch.float64)).item() == 0.0

    def test_gray_pixel_only_regularizer(self) -> None:
        """A gray ground-truth pixel contributes only its regularizer."""
        loss = exposure_loss(tensor([9.0]), tensor([1.0]), tensor([[0.5, 0.5, 0.5]]), tensor([0.03]))

        assert loss.item() == pytest.approx(0.03, abs=1e-15)

    def test_reg_weight(self) -> None:
        """The smoothness term is scaled by reg_weight."""
        cfg = WeightConfig(reg_weight=0.5)
        loss = exposure_loss(tensor([1.0]), tensor([1.0]), tensor([[1.0, 0.0, 0.0]]), tensor([0.4]), cfg)

        assert loss.item() == pytest.approx(0.2, abs=1e-15)

    def test_no_gradient_through_ground_truth(self) -> None:
        """Gradients flow to predictions, not to the colors that set the weights."""
        predicted = tensor([1.2, 0.7]).requires_grad_(True)
        colors = tensor([[1.0, 0.2, 0.0], [0.1, 0.6, 0.3]]).requires_grad_(True)

        exposure_loss(predicted, tensor([1.0, 1.0]), colors, torch.zeros(2, dtype=torch.float64)).backward()

        assert predicted.grad is not None
        assert colors.grad is None
