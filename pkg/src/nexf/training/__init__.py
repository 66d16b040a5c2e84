"""Joint training, checkpoints and test-time rendering."""

from nexf.training.checkpoint import Checkpoint
from nexf.training.rendering import RenderMode, export_exposure_map, render_view
from nexf.training.trainer import LossTerms, Trainer, joint_losses, train, write_loss_csv

__all__ = [
    "Checkpoint",
    "Trainer",
    "LossTerms",
    "joint_losses",
    "train",
    "write_loss_csv",
    "RenderMode",
    "render_view",
    "export_exposure_map",
]
