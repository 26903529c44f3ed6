"""Configuration management for eigenid."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings, overridable via EIGENID_* environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="EIGENID_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Worker parallelism (0 = one worker per CPU)
    threads: int = 0

    # Validation tolerances
    hermitian_tol: float = 1e-12
    orthonormality_tol: float = 1e-10
    unit_tol: float = 1e-12
    residual_tol: float = 1e-8

    # Identity tolerances
    gap_tol_scale: float = 1e-8
    interlacing_tol_scale: float = 1e-10
    stochastic_tol: float = 1e-8
    log_product_threshold: int = 64

    # Deflation and constraint recovery
    ambiguous_drop_tol: float = 1e-10
    recovery_tol: float = 1e-8

    # Experiments
    default_eps: float = 1e-10

    log_level: str = "WARNING"


# Global settings instance
settings = Settings()
