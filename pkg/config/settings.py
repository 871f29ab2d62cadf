"""Application settings using Pydantic."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Literal
from pathlib import Path
import yaml


class SearchSettings(BaseSettings):
    """Bounds for exponent searches and Gröbner computations."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SEARCH__",
        extra="ignore",
    )

    # None keeps the analytic bound (bit length of the modulus / generator)
    exponent_cap: int | None = Field(
        default=None,
        ge=1,
        description="Hard cap on every exponent search (nilpotency, radical membership)",
    )

    max_groebner_pairs: int = Field(
        default=20_000,
        description="S-pairs processed before a Gröbner computation gives up",
    )

    saturation_max_steps: int = Field(
        default=64,
        description="Iterations of (0 : x^k) before saturation is declared divergent",
    )

    def bound(self, analytic: int) -> int:
        """Clamp an analytic exponent bound by the configured cap.

        Args:
            analytic: Bound derived from the ring data

        Returns:
            Effective search bound (at least 1)
        """
        analytic = max(1, analytic)
        if self.exponent_cap is None:
            return analytic
        return min(analytic, self.exponent_cap)

    def truncates(self, analytic: int) -> bool:
        """True when the cap cuts the search short of the analytic bound."""
        return self.exponent_cap is not None and self.exponent_cap < max(1, analytic)


class OracleSettings(BaseSettings):
    """Brute-force oracle configuration."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ORACLE__",
        extra="ignore",
    )

    # Subset scan is 2^n; above this modulus, scan complements of principal ideals
    exhaustive_filter_limit: int = 10
    partition_summand_limit: int | None = None


class SemanticsSettings(BaseSettings):
    """Forcing semantics configuration."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SEMANTICS__",
        extra="ignore",
    )

    expand_finite_quantifiers: bool = True
    beta_symbol: str = "beta"


class SelftestSettings(BaseSettings):
    """Selftest corpus configuration."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="SELFTEST__",
        extra="ignore",
    )

    corpus_config_path: str = "config/selftest.yaml"
    seed: int = 20240601
    formula_count: int = 500
    max_modulus: int = 60

    def load_corpus_config(self) -> dict | None:
        """Load YAML selftest corpus configuration.

        Returns:
            Dict with corpus config or None if file doesn't exist
        """
        config_file = Path(self.corpus_config_path)
        if not config_file.exists():
            return None

        with open(config_file, "r") as f:
            return yaml.safe_load(f)


class Settings(BaseSettings):
    """Main application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    # Sub-settings
    search: SearchSettings = Field(default_factory=SearchSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    semantics: SemanticsSettings = Field(default_factory=SemanticsSettings)
    selftest: SelftestSettings = Field(default_factory=SelftestSettings)

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"


# Global settings instance
settings = Settings()
