"""Pydantic models for run configuration (fields, objectives, training, fusion)."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from nexf.models.scene import CaptureSpec, SceneSpec

Profile = Literal["default", "forward_facing"]
Conditioning = Literal["latent", "radiance", "ignore"]
GloMode = Literal["none", "affine"]


def posenc_dim(levels: int) -> int:
    """Length of the positional encoding of a 3-vector with ``levels`` bands."""
    return 3 + 6 * levels


class StrictModel(BaseModel):
    """Base model rejecting unknown keys."""

    model_config = ConfigDict(extra="forbid")


class MLPSpec(StrictModel):
    """Fully-connected network shape.

    ``widths`` lists every layer width including input and output, so a network with
    one hidden layer has three entries. Layers listed in ``skip_layers`` receive the
    network input concatenated to their regular input.
    """

    widths: list[int] = Field(..., min_length=3, description="Input, hidden..., output widths")
    activation: Literal["relu"] = "relu"
    output_activation: Literal["none", "sigmoid", "softplus", "exp"] = "none"
    skip_layers: list[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_widths(self) -> Self:
        if any(width < 1 for width in self.widths):
            raise ValueError("all layer widths must be >= 1")
        for layer in self.skip_layers:
            if not 1 <= layer < self.num_layers:
                raise ValueError(f"skip layer {layer} outside 1..{self.num_layers - 1}")
        return self

    @property
    def num_layers(self) -> int:
        """Number of affine layers."""
        return len(self.widths) - 1

    @property
    def in_dim(self) -> int:
        """Input width."""
        return self.widths[0]

    @property
    def out_dim(self) -> int:
        """Output width."""
        return self.widths[-1]

    def fan_in(self, layer: int) -> int:
        """Input width of affine layer ``layer`` including any skip concatenation."""
        extra = self.widths[0] if layer in self.skip_layers else 0
        return self.widths[layer] + extra


class RadianceFieldConfig(StrictModel):
    """Exposure-conditioned radiance field f_θ: position branch, bottleneck, view branch."""

    posenc_levels_x: int = Field(default=8, ge=0, le=12)
    posenc_levels_d: int = Field(default=4, ge=0, le=12)
    bottleneck_dim: int = Field(default=256, ge=1)
    pos_mlp: MLPSpec
    view_mlp: MLPSpec
    glo: GloMode = "none"
    conditioning: Conditioning = "latent"

    @model_validator(mode="after")
    def _check_branches(self) -> Self:
        if self.pos_mlp.in_dim != posenc_dim(self.posenc_levels_x):
            raise ValueError("pos_mlp input must equal posenc(x) length")
        if self.pos_mlp.out_dim != self.bottleneck_dim + 1:
            raise ValueError("pos_mlp output must be bottleneck_dim + 1 (density head)")
        if self.view_mlp.in_dim != self.bottleneck_dim + posenc_dim(self.posenc_levels_d):
            raise ValueError("view_mlp input must be bottleneck_dim + posenc(d) length")
        if self.view_mlp.out_dim != 3:
            raise ValueError("view_mlp output must be RGB (3)")
        if self.pos_mlp.output_activation != "none" or self.view_mlp.output_activation != "none":
            raise ValueError("radiance branches must use output_activation 'none'")
        return self

    @classmethod
    def from_profile(cls, profile: Profile = "default", glo: GloMode = "none") -> "RadianceFieldConfig":
        """Build the default or forward-facing architecture.

        Args:
            profile: ``default`` (bottleneck 256, 3x256 view branch with skip) or
                ``forward_facing`` (bottleneck 15, 2x64 view branch, no skip).
            glo: Per-image embedding mode.

        Returns:
            Radiance field configuration.
        """
        levels_x, levels_d = 8, 4
        if profile == "forward_facing":
            bottleneck, pos_hidden, view_hidden, skips = 15, [128, 128, 128], [64, 64], []
        else:
            bottleneck, pos_hidden, view_hidden, skips = 256, [256, 256, 256, 256], [256, 256, 256], [1]
        view_in = bottleneck + posenc_dim(levels_d)
        return cls(
            posenc_levels_x=levels_x,
            posenc_levels_d=levels_d,
            bottleneck_dim=bottleneck,
            pos_mlp=MLPSpec(widths=[posenc_dim(levels_x), *pos_hidden, bottleneck + 1]),
            view_mlp=MLPSpec(widths=[view_in, *view_hidden, 3], skip_layers=skips),
            glo=glo,
        )


class ExposureFieldConfig(StrictModel):
    """Neural exposure field e_φ: position-only MLP with a positive output."""

    posenc_levels: int = Field(default=4, ge=0, le=12)
    mlp: MLPSpec = Field(
        default_factory=lambda: MLPSpec(
            widths=[posenc_dim(4), 128, 128, 128, 128, 1], output_activation="softplus"
        )
    )

    @model_validator(mode="after")
    def _check_mlp(self) -> Self:
        if self.mlp.in_dim != posenc_dim(self.posenc_levels):
            raise ValueError("exposure mlp input must equal posenc(x) length")
        if self.mlp.out_dim != 1:
            raise ValueError("exposure mlp output must be scalar")
        if self.mlp.output_activation not in ("softplus", "exp"):
            raise ValueError("exposure mlp output activation must be positive (softplus|exp)")
        return self


class WeightConfig(StrictModel):
    """Per-pixel weighting and exposure-loss hyperparameters."""

    sigma_exp: float = Field(default=0.05, gt=0)
    lambda_exp: float = Field(default=0.1, ge=0)
    lambda_sat: float = Field(default=1.0, ge=0)
    sat_floor: float = Field(default=0.0, ge=0)
    reg_weight: float = Field(default=1.0, ge=0, description="Weight of the smoothness term")
    use_well_exposedness: bool = True
    use_saturation: bool = True


class TrainConfig(StrictModel):
    """Joint optimization settings."""

    iterations: int = Field(default=10_000, ge=0)
    rays_per_batch: int = Field(default=1024, ge=1)
    learning_rate: float = Field(default=5e-3, gt=0)
    learning_rate_final: float = Field(default=5e-4, gt=0)
    warmup_steps: int = Field(default=200, ge=0)
    num_samples: int = Field(default=64, ge=1)
    reg_noise_std: float = Field(default=0.05, ge=0)
    weights: WeightConfig = Field(default_factory=WeightConfig)
    log_every: int = Field(default=100, ge=1)
    seed: int = 0

    @classmethod
    def room_scale(cls) -> "TrainConfig":
        """Iteration budget for room-scale scenes."""
        return cls(iterations=25_000)


class FusionConfig(StrictModel):
    """Mertens exposure-fusion settings."""

    contrast_weight: float = Field(default=1.0, ge=0)
    saturation_weight: float = Field(default=1.0, ge=0)
    exposedness_weight: float = Field(default=1.0, ge=0)
    sigma: float = Field(default=0.2, gt=0)
    levels: int | Literal["auto"] = "auto"

    @model_validator(mode="after")
    def _check_exponents(self) -> Self:
        if max(self.contrast_weight, self.saturation_weight, self.exposedness_weight) <= 0:
            raise ValueError("at least one fusion exponent must be > 0")
        if isinstance(self.levels, int) and self.levels < 1:
            raise ValueError("pyramid levels must be >= 1")
        return self


class RunConfig(StrictModel):
    """Top-level run configuration aggregating every component."""

    scene: SceneSpec
    capture: CaptureSpec = Field(default_factory=CaptureSpec)
    profile: Profile = "default"
    radiance: RadianceFieldConfig | None = None
    exposure: ExposureFieldConfig = Field(default_factory=ExposureFieldConfig)
    train: TrainConfig = Field(default_factory=TrainConfig)
    fusion: FusionConfig = Field(default_factory=FusionConfig)
    output_dir: str = "runs/nexf"
    seed: int = 0

    @model_validator(mode="after")
    def _resolve(self) -> Self:
        if self.radiance is None:
            self.radiance = RadianceFieldConfig.from_profile(self.profile)
        self.train.seed = self.seed
        return self

    @property
    def radiance_config(self) -> RadianceFieldConfig:
        """Resolved radiance field configuration."""
        assert self.radiance is not None
        return self.radiance

    @classmethod
    def default(cls) -> "RunConfig":
        """Default configuration on the canonical two-region scene."""
        return cls(scene=SceneSpec(preset="two_region"))
