"""
Configuration settings for the braidforge toolkit.
Uses pydantic-settings for environment variable management.
"""

from enum import Enum
from typing import Literal, Optional

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from models.errors import UsageError


class ScalarMode(str, Enum):
    """Scalar arithmetic used for root coordinates."""

    AUTO = "auto"
    RATIONAL = "rational"
    QUADRATIC = "quadratic"
    FLOAT = "float"


class Settings(BaseSettings):
    """Toolkit settings loaded from BRAIDFORGE_* environment variables or .env file."""

    model_config = SettingsConfigDict(
        env_prefix="BRAIDFORGE_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Scalars
    scalar_mode: ScalarMode = Field(
        default=ScalarMode.AUTO,
        description="Scalar mode for Coxeter computations: auto | rational | quadratic | float"
    )
    float_tolerance: float = Field(
        default=1e-9,
        gt=0.0,
        description="Zero tolerance for float mode signs and eigenvalues"
    )

    # Logging
    log_level: str = Field(
        default="WARNING",
        description="Logging level (DEBUG, INFO, WARNING, ERROR)"
    )

    # Dehornoy ordering
    handle_budget: int = Field(
        default=1_000_000,
        ge=1,
        description="Maximum number of handle reductions before giving up"
    )

    # Krammer orbit machinery
    orbit_depth: int = Field(
        default=20,
        ge=1,
        description="BFS depth of the positive roots scanned for odd roots"
    )
    orbit_m_max: int = Field(
        default=512,
        ge=1,
        description="Largest |m| for which w^m alpha is computed"
    )
    orbit_exit_streak: int = Field(
        default=8,
        ge=1,
        description="Consecutive steps above the window height that count as a decisive exit"
    )
    closure_depth: int = Field(
        default=24,
        ge=1,
        description="Maximal root depth admitted into the reflection closure"
    )
    closure_limit: int = Field(
        default=20_000,
        ge=1,
        description="Maximal number of roots held by the reflection closure"
    )

    # Braid classification
    classify_radius: int = Field(
        default=2,
        ge=0,
        description="Canonical length bound of conjugators in the reducibility search"
    )

    # Execution
    jobs: int = Field(
        default=1,
        ge=1,
        description="Worker count for parallel searches and batch files"
    )
    output_format: Literal["lines", "text"] = Field(
        default="lines",
        description="CLI output format: machine-readable key=value lines or text"
    )


def load_settings() -> tuple[Settings, Optional[str]]:
    """
    Read settings from the environment.

    Invalid values do not raise here: defaults are used and the problem is
    returned so the CLI can report it as a usage error.
    """
    try:
        return Settings(), None
    except ValidationError as e:
        problems = "; ".join(
            "BRAIDFORGE_" + "_".join(str(part) for part in err["loc"]).upper() + ": " + err["msg"]
            for err in e.errors()
        )
        return Settings.model_construct(), problems


# Global settings instance
settings, settings_error = load_settings()


def get_settings() -> Settings:
    """Get the global settings instance; UsageError if the environment was invalid."""
    if settings_error:
        raise UsageError(f"invalid configuration: {settings_error}")
    return settings
