"""Training checkpoints: parameters, configs, optimizer moments and RNG states."""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from nexf.core.codec import OptimizerMoments, decode, encode
from nexf.core.params import ParamStore
from nexf.exceptions import CheckpointFormatError
from nexf.models.config import ExposureFieldConfig, RadianceFieldConfig, TrainConfig
from nexf.models.scene import SceneBounds


@dataclass
class Checkpoint:
    """Everything needed to render from, or resume, a training run."""

    store: ParamStore
    radiance: RadianceFieldConfig
    exposure: ExposureFieldConfig
    train: TrainConfig
    bounds: SceneBounds
    iteration: int = 0
    num_train_images: int = 0
    mean_train_exposure: float = 1.0
    rng_state: dict[str, str] = field(default_factory=dict)
    moments: OptimizerMoments | None = None

    def metadata(self) -> dict[str, Any]:
        """JSON metadata block."""
        return {
            "radiance": self.radiance.model_dump(mode="json"),
            "exposure": self.exposure.model_dump(mode="json"),
            "train": self.train.model_dump(mode="json"),
            "bounds": self.bounds.model_dump(mode="json"),
            "iteration": self.iteration,
            "num_train_images": self.num_train_images,
            "mean_train_exposure": self.mean_train_exposure,
            "rng_state": dict(sorted(self.rng_state.items())),
        }

    def to_bytes(self) -> bytes:
        """Serialize to the checkpoint container format."""
        return encode(self.store, self.metadata(), self.moments)

    @classmethod
    def from_bytes(cls, payload: bytes) -> "Checkpoint":
        """Inverse of :meth:`to_bytes`.

        Raises:
            CheckpointFormatError: If the container or its metadata is malformed.
        """
        store, meta, moments = decode(payload)
        try:
            return cls(
                store=store,
                radiance=RadianceFieldConfig.model_validate(meta["radiance"]),
                exposure=ExposureFieldConfig.model_validate(meta["exposure"]),
                train=TrainConfig.model_validate(meta["train"]),
                bounds=SceneBounds.model_validate(meta["bounds"]),
                iteration=int(meta["iteration"]),
                num_train_images=int(meta["num_train_images"]),
                mean_train_exposure=float(meta["mean_train_exposure"]),
                rng_state={str(k): str(v) for k, v in meta.get("rng_state", {}).items()},
                moments=moments,
            )
        except (KeyError, TypeError, ValidationError) as e:
            raise CheckpointFormatError(f"invalid checkpoint metadata: {e}") from e

    def save(self, path: Path) -> None:
        """Write to ``path``."""
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: Path) -> "Checkpoint":
        """Read a checkpoint written by :meth:`save`."""
        return cls.from_bytes(path.read_bytes())
