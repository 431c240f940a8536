"""Centralized configuration using pydantic-settings."""
from __future__ import annotations

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from utils.errors import ConfigurationError


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="BARGRAPH_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    # ── App ───────────────────────────────────────────────────────────────────
    log_level: str = Field(default="WARNING", description="structlog filtering level")
    environment: str = Field(default="development")
    workers: int = Field(default=1, ge=1, description="Processes used by partitioned censuses")

    # ── Resource bounds ───────────────────────────────────────────────────────
    max_xcap: int = Field(default=24, ge=0, description="Largest accepted x-cap (cells)")
    max_ycap: int = Field(default=24, ge=0, description="Largest accepted y-cap (columns)")
    max_cells: int = Field(default=22, ge=0, description="Largest bargraph census / enumeration")
    max_setpart: int = Field(default=12, ge=0, description="Largest set-partition census / enumeration")
    max_blocks: int = Field(default=10, ge=1, description="Largest block count k; products solve to x-cap k * columns")

    # ── Verification defaults ─────────────────────────────────────────────────
    verify_xcap: int = Field(default=20, ge=1)
    verify_ycap: int = Field(default=20, ge=1)
    verify_setpart_max: int = Field(default=11, ge=1)
    verify_vw_max: int = Field(default=4, ge=1)
    verify_blocks_max: int = Field(default=8, ge=1, description="k range of the Stirling product check")
    verify_columns_max: int = Field(default=20, ge=1, description="n range of the Stirling product check")
    verify_closed_blocks_max: int = Field(default=6, ge=1)
    verify_closed_columns_max: int = Field(default=14, ge=1)
    verify_asymptotic_window: int = Field(
        default=5, ge=1, description="Classifier steps: ratios on n_hi - window .. n_hi, window + 1 values"
    )

    def check_caps(self, xcap: int, ycap: int) -> None:
        if xcap < 0 or ycap < 0:
            raise ConfigurationError(f"caps must be non-negative, got ({xcap}, {ycap})")
        if xcap > self.max_xcap or ycap > self.max_ycap:
            raise ConfigurationError(
                f"caps ({xcap}, {ycap}) exceed the configured bound "
                f"({self.max_xcap}, {self.max_ycap})"
            )

    def check_cells(self, n: int) -> None:
        if n < 0 or n > self.max_cells:
            raise ConfigurationError(f"cell bound {n} outside 0..{self.max_cells}")

    def check_setpart(self, n: int) -> None:
        if n < 0 or n > self.max_setpart:
            raise ConfigurationError(f"set-partition bound {n} outside 0..{self.max_setpart}")

    def check_blocks(self, k: int) -> None:
        if k < 1 or k > self.max_blocks:
            raise ConfigurationError(f"block count {k} outside 1..{self.max_blocks}")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
