"""Custom exceptions for nexf."""


class NexfError(Exception):
    """Base exception for all nexf errors."""

    def __init__(self, message: str) -> None:
        """Initialize nexf error.

        Args:
            message: Error message
        """
        super().__init__(message)
        self.message = message


class ConfigValidationError(NexfError):
    """Run configuration, manifest or command-line input failed validation."""

    def __init__(self, message: str, fields: list[str] | None = None) -> None:
        """Initialize configuration validation error.

        Args:
            message: Error message
            fields: Dotted locations of the offending fields
        """
        super().__init__(message)
        self.fields = fields or []


class DimensionMismatchError(NexfError):
    """Array or image shapes do not agree."""

    pass


class InvalidExposureError(ConfigValidationError):
    """Exposure time is not strictly positive."""

    pass


class NonFiniteError(NexfError):
    """A NaN or infinity appeared in a loss or gradient."""

    def __init__(
        self, message: str, operation: str | None = None, iteration: int | None = None
    ) -> None:
        """Initialize non-finite error.

        Args:
            message: Error message
            operation: Name of the offending operation, when known
            iteration: Training iteration, when raised by the trainer
        """
        super().__init__(message)
        self.operation = operation
        self.iteration = iteration


class CompositingError(NexfError):
    """Exposure compositing requested before color compositing cached its weights."""

    pass


class CheckpointFormatError(NexfError):
    """Checkpoint file is malformed."""

    pass


class ImageFormatError(NexfError):
    """PFM or PPM file is malformed."""

    pass


class FusionError(NexfError):
    """Exposure stack cannot be fused."""

    pass


class MissingExposureStackError(NexfError):
    """A test camera is not stored at every exposure of the exposure set."""

    pass
