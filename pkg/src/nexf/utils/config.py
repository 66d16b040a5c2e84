"""Process settings using Pydantic settings."""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-level settings loaded from environment variables (prefix ``NEXF_``)."""

    model_config = SettingsConfigDict(
        env_prefix="NEXF_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    debug: bool = False
    log_level: str = "INFO"

    # Numerics
    num_threads: int = Field(default=1, ge=1, description="torch intra-op threads")
    deterministic: bool = True

    # Rendering
    render_chunk: int = Field(default=4096, ge=1, description="Rays per rendering chunk")

    @property
    def is_debug(self) -> bool:
        """Check if running in debug mode."""
        return self.debug


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance.

    Returns:
        Singleton Settings instance loaded from environment.
    """
    return Settings()


def configure_torch(settings: Settings | None = None) -> None:
    """Apply the numeric settings to torch.

    A fixed thread count keeps reduction order, and with it every float64 result,
    identical between runs.
    """
    import torch

    settings = settings or get_settings()
    torch.set_num_threads(settings.num_threads)
    if settings.deterministic:
        torch.use_deterministic_algorithms(True)
