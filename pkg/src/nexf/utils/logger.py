"""Logging configuration for nexf.

Log calls carry structured context (iteration, camera, seed, ...) as keyword
arguments; the handler renders it as ``key=value`` pairs after the message.
"""

import logging
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

from nexf.utils.config import get_settings

ROOT_LOGGER = "nexf"


class ContextFormatter(logging.Formatter):
    """Append a record's ``context`` mapping to its message."""

    def format(self, record: logging.LogRecord) -> str:
        message = super().format(record)
        context: dict[str, Any] = getattr(record, "context", None) or {}
        if not context:
            return message
        pairs = " ".join(f"{key}={_short(value)}" for key, value in context.items())
        return f"{message}  {pairs}"


def _short(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def setup_logging(level: str | None = None) -> logging.Logger:
    """Attach a Rich handler on stderr to the ``nexf`` logger.

    Safe to call more than once: later calls only update the level.

    Args:
        level: Overrides ``NEXF_LOG_LEVEL``.

    Returns:
        The package logger.
    """
    settings = get_settings()
    level = (level or ("DEBUG" if settings.is_debug else settings.log_level)).upper()
    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level)

    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            rich_tracebacks=True,
            tracebacks_show_locals=settings.debug,
            show_path=settings.debug,
        )
        handler.setFormatter(ContextFormatter("%(message)s"))
        logger.addHandler(handler)
        logger.propagate = False

    # torch emits deprecation chatter through logging on some builds
    logging.getLogger("torch").setLevel(logging.WARNING)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Logger below the package logger.

    Args:
        name: Module ``__name__`` or a short component name.
    """
    if name == ROOT_LOGGER or name.startswith(f"{ROOT_LOGGER}."):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


class LoggerMixin:
    """Logging with structured context for pipeline components."""

    @property
    def logger(self) -> logging.Logger:
        """Logger named after the concrete class."""
        return get_logger(self.__class__.__name__)

    def log_info(self, message: str, **context: Any) -> None:
        """Log at INFO with context."""
        self.logger.info(message, extra={"context": context})

    def log_error(self, message: str, exc_info: bool = False, **context: Any) -> None:
        """Log at ERROR with context."""
        self.logger.error(message, exc_info=exc_info, extra={"context": context})

    def log_warning(self, message: str, **context: Any) -> None:
        """Log at WARNING with context."""
        self.logger.warning(message, extra={"context": context})

    def log_debug(self, message: str, **context: Any) -> None:
        """Log at DEBUG with context."""
        self.logger.debug(message, extra={"context": context})
