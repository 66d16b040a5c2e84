"""Tests for volume compositing."""

import math

import numpy as np
import pytest
import torch

from nexf.core.params import DTYPE
from nexf.exceptions import CompositingError
from nexf.models import Camera, PrimitiveSpec, SceneSpec
from nexf.render.composite import (
    RaySampleBatch,
    composite_color,
    composite_exposure,
    composite_reg,
    compute_weights,
)
from nexf.render.reference import render_reference
from nexf.scene.cameras import look_at


def make_batch(sigma: list[list[float]], deltas: list[list[float]] | None = None) -> RaySampleBatch:
    """Sample batch with given densities; positions and directions are placeholders."""
    s = torch.tensor(sigma, dtype=DTYPE)
    rays, samples = s.shape
    return RaySampleBatch(
        t=torch.zeros(rays, samples, dtype=DTYPE),
        positions=torch.zeros(rays, samples, 3, dtype=DTYPE),
        deltas=torch.tensor(deltas, dtype=DTYPE) if deltas else torch.ones(rays, samples, dtype=DTYPE),
        directions=torch.zeros(rays, samples, 3, dtype=DTYPE),
        sigma=s,
    )


class TestCompositeColor:
    """Test color compositing and weights."""

    def test_empty_space(self) -> None:
        """Zero density gives a black pixel and zero weights."""
        batch = make_batch([[0.0, 0.0, 0.0]])
        batch.colors = torch.rand(1, 3, 3, dtype=DTYPE)

        assert composite_color(batch).tolist() == [[0.0, 0.0, 0.0]]
        assert batch.weights is not None and batch.weights.abs().sum().item() == 0.0

    def test_half_opacity(self) -> None:
        """σδ = ln 2 gives α = 0.5."""
        batch = make_batch([[math.log(2.0)]])
        batch.colors = torch.ones(1, 1, 3, dtype=DTYPE)

        assert composite_color(batch)[0].tolist() == pytest.approx([0.5, 0.5, 0.5], abs=1e-15)

    def test_opaque_first_sample(self) -> None:
        """σδ = 20 on the first sample hides everything behind it."""
        batch = make_batch([[20.0, 5.0]])
        batch.colors = torch.tensor([[[0.3, 0.6, 0.9], [1.0, 1.0, 1.0]]], dtype=DTYPE)

        pixel = composite_color(batch)[0]
        assert torch.allclose(pixel, torch.tensor([0.3, 0.6, 0.9], dtype=DTYPE), atol=3e-9, rtol=0)

    def test_weights_sum_to_opacity(self) -> None:
        """Σw = 1 - Π(1 - α) and every weight lies in [0, 1]."""
        gen = torch.Generator().manual_seed(0)
        sigma = torch.rand(20, 16, generator=gen, dtype=DTYPE) * 3
        deltas = torch.rand(20, 16, generator=gen, dtype=DTYPE) * 0.2
        batch = make_batch(sigma.tolist(), deltas.tolist())

        weights = compute_weights(batch)
        expected = 1.0 - torch.exp(-(sigma * deltas).sum(dim=-1))

        assert torch.allclose(weights.sum(dim=-1), expected, atol=1e-12, rtol=0)
        assert bool(((weights >= 0) & (weights <= 1)).all())
        assert batch.transmittance is not None and bool((batch.transmittance[:, 0] == 1).all())

    def test_missing_inputs(self) -> None:
        """Compositing without densities or colors is an error."""
        batch = make_batch([[1.0]])
        with pytest.raises(CompositingError):
            composite_color(batch)
        batch.sigma = None
        with pytest.raises(CompositingError):
            compute_weights(batch)


class TestCompositeExposure:
    """Test exposure and regularizer compositing over frozen weights."""

    def test_weighted_sum(self) -> None:
        """w = (0.5, 0.25) and Δt̂ = (1, 2) composite to 1.0."""
        batch = make_batch([[0.0, 0.0]])
        batch.weights = torch.tensor([[0.5, 0.25]], dtype=DTYPE)
        batch.exposures = torch.tensor([[1.0, 2.0]], dtype=DTYPE)

        assert composite_exposure(batch).tolist() == [1.0]

    def test_regularizer_sum(self) -> None:
        """w = (0.5, 0.5) and diffs = (0.04, 0.16) composite to 0.10."""
        batch = make_batch([[0.0, 0.0]])
        batch.weights = torch.tensor([[0.5, 0.5]], dtype=DTYPE)
        batch.reg_terms = torch.tensor([[0.04, 0.16]], dtype=DTYPE)

        assert composite_reg(batch).item() == pytest.approx(0.10, abs=1e-15)

    def test_opaque_ray_recovers_constant(self) -> None:
        """A constant exposure k on an opaque ray composites to about k."""
        batch = make_batch([[30.0, 30.0, 30.0]])
        batch.colors = torch.zeros(1, 3, 3, dtype=DTYPE)
        composite_color(batch)
        batch.exposures = torch.full((1, 3), 0.7, dtype=DTYPE)

        assert composite_exposure(batch).item() == pytest.approx(0.7, abs=1e-12)

    def test_zero_weights(self) -> None:
        """Empty rays composite to zero exposure and zero regularizer."""
        batch = make_batch([[0.0, 0.0]])
        batch.colors = torch.zeros(1, 2, 3, dtype=DTYPE)
        composite_color(batch)
        batch.exposures = torch.ones(1, 2, dtype=DTYPE)
        batch.reg_terms = torch.ones(1, 2, dtype=DTYPE)

        assert composite_exposure(batch).item() == 0.0
        assert composite_reg(batch).item() == 0.0

    def test_no_gradient_reaches_density(self) -> None:
        """Exposure compositing treats the weights as constants."""
        sigma = torch.tensor([[0.5, 1.5]], dtype=DTYPE, requires_grad=True)
        exposures = torch.tensor([[1.0, 3.0]], dtype=DTYPE, requires_grad=True)
        batch = make_batch([[0.0, 0.0]])
        batch.sigma = sigma
        batch.colors = torch.ones(1, 2, 3, dtype=DTYPE)
        composite_color(batch)
        batch.exposures = exposures

        composite_exposure(batch).sum().backward()

        assert sigma.grad is None
        assert exposures.grad is not None
        assert batch.weights is not None
        assert torch.equal(exposures.grad, batch.weights.detach())

    def test_requires_weights(self) -> None:
        """Exposure compositing before color compositing is an error."""
        batch = make_batch([[1.0]])
        batch.exposures = torch.ones(1, 1, dtype=DTYPE)

        with pytest.raises(CompositingError, match="composite_color"):
            composite_exposure(batch)


class TestRenderReference:
    """Test ground-truth ray marching."""

    def test_opaque_sphere(self) -> None:
        """A dense sphere renders its radiance at the center and background at the corners."""
        scene = SceneSpec(
            primitives=[PrimitiveSpec(shape="sphere", density=50.0, radiance=(2.0, 1.0, 0.5))],
        )
        camera: Camera = look_at(np.array([3.0, 0.0, 0.0]), np.zeros(3), 20.0, 15, 15)
        image = render_reference(scene, camera, scene.bounds(), num_samples=64)

        assert image.shape == (15, 15, 3)
        assert image[7, 7] == pytest.approx([2.0, 1.0, 0.5], abs=1e-6)
        assert image[0, 0].tolist() == [0.0, 0.0, 0.0]
