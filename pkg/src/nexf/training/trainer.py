"""Joint optimization of the radiance field and the exposure field."""

import csv
import math
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path

import torch

from nexf.core.autodiff import GradTape
from nexf.core.optim import adam_step, export_moments, import_moments, learning_rate, make_optimizer
from nexf.core.params import DTYPE, ParamStore
from nexf.exceptions import ConfigValidationError, DimensionMismatchError, NonFiniteError
from nexf.fields.exposure import exposure_diff, exposure_forward
from nexf.fields.layout import init_fields, phi_mask, theta_mask
from nexf.fields.radiance import radiance_forward
from nexf.models.config import ExposureFieldConfig, RadianceFieldConfig, TrainConfig, WeightConfig
from nexf.models.dataset import DatasetManifest
from nexf.models.metrics import LossRecord
from nexf.objectives.losses import exposure_loss, photometric_loss
from nexf.render.composite import RaySampleBatch, composite_color, composite_exposure, composite_reg
from nexf.render.rays import RayBundle, generate_rays
from nexf.render.sampling import sample_stratified
from nexf.scene.imageio import read_ppm
from nexf.training.checkpoint import Checkpoint
from nexf.utils import rng
from nexf.utils.config import get_settings
from nexf.utils.logger import LoggerMixin

LOSS_CSV_HEADER = ["iteration", "loss_f", "loss_e", "total", "lr"]
STREAMS = (rng.SAMPLING, rng.JITTER, rng.REG_NOISE)

StepCallback = Callable[[LossRecord], None]


@dataclass
class LossTerms:
    """Both loss terms of one batch and the sample batch they were computed on."""

    photometric: torch.Tensor
    exposure: torch.Tensor
    batch: RaySampleBatch

    @property
    def total(self) -> torch.Tensor:
        """L = L_f + L_e."""
        return self.photometric + self.exposure


def joint_losses(
    store: ParamStore,
    radiance: RadianceFieldConfig,
    exposure: ExposureFieldConfig,
    weights: WeightConfig,
    rays: RayBundle,
    target: torch.Tensor,
    num_samples: int,
    reg_noise_std: float = 0.05,
    jitter: torch.Generator | None = None,
    noise: torch.Generator | None = None,
) -> LossTerms:
    """L_f and L_e on a ray batch.

    Color is conditioned on each ray's input exposure; the exposure field only enters
    L_e, which composites with detached weights and weights pixels by ground-truth color.
    The smoothness term is skipped without a noise generator or with ``reg_weight`` 0.
    """
    batch = sample_stratified(rays, num_samples, jitter)
    count, samples = batch.t.shape
    glo_index = rays.view_index[:, None].expand(count, samples) if radiance.glo == "affine" else None
    batch.sigma, batch.colors = radiance_forward(
        store,
        radiance,
        batch.positions,
        batch.directions,
        rays.exposure[:, None].expand(count, samples),
        glo_index,
    )
    loss_f = photometric_loss(composite_color(batch), target)

    batch.exposures = exposure_forward(store, exposure, batch.positions)
    if noise is not None and weights.reg_weight > 0:
        eps = torch.randn(batch.positions.shape, generator=noise, dtype=DTYPE) * reg_noise_std
        batch.reg_terms = exposure_diff(store, exposure, batch.positions, eps)
    else:
        batch.reg_terms = torch.zeros_like(batch.exposures)
    loss_e = exposure_loss(
        composite_exposure(batch), rays.exposure, target, composite_reg(batch), weights
    )
    return LossTerms(loss_f, loss_e, batch)


def load_training_rays(manifest: DatasetManifest, manifest_dir: Path) -> tuple[RayBundle, torch.Tensor]:
    """Rays and ground-truth colors of every training pixel, view by view."""
    bundles, colors = [], []
    for index, view in enumerate(manifest.train_views):
        image = read_ppm(manifest_dir / view.image)
        if image.shape[:2] != (view.camera.height, view.camera.width):
            raise DimensionMismatchError(
                f"{view.image}: image is {image.shape[1]}x{image.shape[0]}, "
                f"camera is {view.camera.width}x{view.camera.height}"
            )
        bundles.append(generate_rays(view.camera, manifest.bounds, view_index=index, exposure=view.exposure))
        colors.append(torch.from_numpy(image.reshape(-1, 3)))
    return RayBundle.concat(bundles), torch.cat(colors)


def write_loss_csv(records: list[LossRecord], path: Path) -> None:
    """Write the loss trace, one row per logged iteration."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(LOSS_CSV_HEADER)
        for r in records:
            writer.writerow([r.iteration, repr(r.loss_f), repr(r.loss_e), repr(r.total), repr(r.lr)])


def batch_psnr(record: LossRecord, rays_per_batch: int) -> float:
    """Training PSNR implied by a summed photometric loss."""
    mse = record.loss_f / (3 * rays_per_batch)
    return math.inf if mse == 0 else -10.0 * math.log10(mse)


class Trainer(LoggerMixin):
    """Runs the joint optimization loop over a dataset's training views."""

    def __init__(
        self,
        manifest: DatasetManifest,
        manifest_dir: Path,
        train: TrainConfig,
        radiance: RadianceFieldConfig | None = None,
        exposure: ExposureFieldConfig | None = None,
        resume: Checkpoint | None = None,
    ) -> None:
        """Initialize trainer.

        Args:
            manifest: Dataset with at least one training view.
            manifest_dir: Directory image paths are relative to.
            train: Optimization settings.
            radiance: Radiance field architecture (taken from ``resume`` when given).
            exposure: Exposure field architecture (taken from ``resume`` when given).
            resume: Checkpoint to continue from, including optimizer and RNG state.

        Raises:
            ConfigValidationError: If the manifest has no training views or the field
                configs disagree with the resumed checkpoint.
        """
        if not manifest.train_views:
            raise ConfigValidationError("manifest has no training views", fields=["views"])
        self.manifest = manifest
        self.config = train
        self.rays, self.colors = load_training_rays(manifest, manifest_dir)
        num_images = len(manifest.train_views)

        if resume is not None:
            if radiance is not None and radiance != resume.radiance:
                raise ConfigValidationError("radiance config differs from checkpoint", fields=["radiance"])
            if exposure is not None and exposure != resume.exposure:
                raise ConfigValidationError("exposure config differs from checkpoint", fields=["exposure"])
            self.radiance, self.exposure = resume.radiance, resume.exposure
            self.store = resume.store.clone(requires_grad=True)
            self.iteration = resume.iteration
        else:
            self.radiance = radiance or RadianceFieldConfig.from_profile()
            self.exposure = exposure or ExposureFieldConfig()
            init = rng.torch_stream(train.seed, rng.INIT)
            self.store = init_fields(self.radiance, self.exposure, init, num_images)
            self.iteration = 0

        self.streams = {name: rng.torch_stream(train.seed, name) for name in STREAMS}
        self.optimizer = make_optimizer(self.store, train.learning_rate)
        if resume is not None:
            for name, state in resume.rng_state.items():
                if name in self.streams:
                    rng.decode_state(self.streams[name], state)
            if resume.moments is not None:
                import_moments(self.optimizer, self.store, resume.moments)
        self.history: list[LossRecord] = []
        self.groups = {"theta": theta_mask(self.store), "phi": phi_mask(self.store)}
        self.grad_norms: dict[str, float] = {}
        self.detect_anomaly = get_settings().debug

    def step(self) -> LossRecord:
        """Run one iteration and return its losses.

        Raises:
            NonFiniteError: If a loss or gradient is not finite; carries the iteration.
        """
        cfg = self.config
        it = self.iteration
        idx = torch.randint(len(self.rays), (cfg.rays_per_batch,), generator=self.streams[rng.SAMPLING])
        lr = learning_rate(it, cfg.iterations, cfg.learning_rate, cfg.learning_rate_final, cfg.warmup_steps)
        try:
            with GradTape(self.store, detect_anomaly=self.detect_anomaly) as tape:
                terms = joint_losses(
                    self.store,
                    self.radiance,
                    self.exposure,
                    cfg.weights,
                    self.rays.index(idx),
                    self.colors[idx],
                    cfg.num_samples,
                    cfg.reg_noise_std,
                    jitter=self.streams[rng.JITTER],
                    noise=self.streams[rng.REG_NOISE],
                )
                total = terms.total
                gradient = tape.backward(total)
            self.grad_norms = {name: float(gradient[mask].norm()) for name, mask in self.groups.items()}
            adam_step(self.optimizer, self.store, gradient, lr)
        except NonFiniteError as e:
            e.iteration = it
            self.log_error(f"Non-finite value at iteration {it}: {e.message}", iteration=it)
            raise
        self.iteration = it + 1
        loss_f, loss_e = float(terms.photometric), float(terms.exposure)
        return LossRecord(iteration=it, loss_f=loss_f, loss_e=loss_e, total=float(total), lr=lr)

    def run(self, on_step: StepCallback | None = None) -> Checkpoint:
        """Iterate up to ``config.iterations`` and return the final checkpoint.

        Records every ``log_every``-th iteration and the last one in ``history``.
        """
        cfg = self.config
        self.log_info(
            f"Training {cfg.iterations - self.iteration} iterations on {len(self.rays)} rays",
            start=self.iteration,
        )
        while self.iteration < cfg.iterations:
            record = self.step()
            if (record.iteration + 1) % cfg.log_every == 0 or self.iteration == cfg.iterations:
                self.history.append(record)
                self.log_debug(
                    f"iter {record.iteration}: L_f={record.loss_f:.6g} L_e={record.loss_e:.6g}",
                    iteration=record.iteration,
                    grad_theta=self.grad_norms["theta"],
                    grad_phi=self.grad_norms["phi"],
                )
            if on_step is not None:
                on_step(record)
        return self.checkpoint()

    def checkpoint(self) -> Checkpoint:
        """Snapshot of the current state."""
        return Checkpoint(
            store=self.store.clone(requires_grad=False),
            radiance=self.radiance,
            exposure=self.exposure,
            train=self.config,
            bounds=self.manifest.bounds,
            iteration=self.iteration,
            num_train_images=len(self.manifest.train_views),
            mean_train_exposure=self.manifest.mean_train_exposure,
            rng_state={name: rng.encode_state(g) for name, g in self.streams.items()},
            moments=export_moments(self.optimizer, self.store),
        )


def train(
    manifest: DatasetManifest,
    cfg: TrainConfig,
    manifest_dir: Path,
    radiance: RadianceFieldConfig | None = None,
    exposure: ExposureFieldConfig | None = None,
    resume: Checkpoint | None = None,
) -> Checkpoint:
    """Train both fields on a dataset and return the final checkpoint."""
    return Trainer(manifest, manifest_dir, cfg, radiance, exposure, resume).run()
