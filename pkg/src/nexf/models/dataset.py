"""Pydantic models for multi-exposure dataset manifests."""

from collections import defaultdict
from pathlib import Path
from typing import Any, Literal, Self

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from nexf.models.scene import Camera, SceneBounds

Split = Literal["train", "test"]


class ViewRecord(BaseModel):
    """One LDR capture: a camera, its exposure time and the image on disk."""

    model_config = ConfigDict(extra="forbid")

    camera: Camera
    exposure: float = Field(..., gt=0, description="Exposure time in seconds")
    image: str = Field(..., description="LDR PPM path, relative to the manifest")
    split: Split
    camera_index: int = Field(default=0, ge=0)
    hdr: str | None = Field(default=None, description="HDR PFM path (test cameras)")


class DatasetManifest(BaseModel):
    """Train and test captures of one scene over a shared exposure set."""

    model_config = ConfigDict(extra="forbid")

    exposure_set: list[float] = Field(..., min_length=1)
    bounds: SceneBounds = Field(..., description="Ray near/far box; derived from the cameras when omitted")
    views: list[ViewRecord] = Field(default_factory=list)

    @model_validator(mode="before")
    @classmethod
    def _derive_bounds(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("bounds") is not None:
            return data
        views = data.get("views") or []
        try:
            cameras = [
                view.camera if isinstance(view, ViewRecord) else Camera.model_validate(view["camera"])
                for view in views
            ]
        except (KeyError, TypeError, ValidationError):
            # malformed views are reported by field validation
            return data
        if not cameras:
            raise ValueError("manifest needs bounds or at least one view")
        return {**data, "bounds": SceneBounds.from_cameras(cameras)}

    @model_validator(mode="after")
    def _check_exposures(self) -> Self:
        allowed = set(self.exposure_set)
        for view in self.views:
            if view.exposure not in allowed:
                raise ValueError(f"view exposure {view.exposure} not in exposure_set")
        return self

    @property
    def train_views(self) -> list[ViewRecord]:
        """Training captures in manifest order."""
        return [view for view in self.views if view.split == "train"]

    @property
    def test_views(self) -> list[ViewRecord]:
        """Test captures in manifest order."""
        return [view for view in self.views if view.split == "test"]

    @property
    def mean_train_exposure(self) -> float:
        """Mean exposure over training captures."""
        train = self.train_views
        return sum(view.exposure for view in train) / len(train) if train else 1.0

    def test_stacks(self) -> dict[int, list[ViewRecord]]:
        """Test captures grouped by camera, each stack sorted by exposure."""
        stacks: dict[int, list[ViewRecord]] = defaultdict(list)
        for view in self.test_views:
            stacks[view.camera_index].append(view)
        return {k: sorted(v, key=lambda view: view.exposure) for k, v in sorted(stacks.items())}

    def save(self, path: Path) -> None:
        """Write the manifest as JSON."""
        path.write_text(self.model_dump_json(indent=2))

    @classmethod
    def load(cls, path: Path) -> "DatasetManifest":
        """Read a manifest written by :meth:`save`."""
        return cls.model_validate_json(path.read_text())
