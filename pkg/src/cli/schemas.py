"""
Validated run configuration for the command line.

Flags left unset fall back to the Config singleton (environment, then YAML, then defaults).
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.certificates import RulePolicy
from src.utils.config import config

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


# ==========================================
# Run Configuration
# ==========================================

class RunConfig(BaseModel):
    """Global options shared by every verb."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    threads: int = Field(default_factory=lambda: config.THREADS, ge=0, description="Worker processes, 0 = logical cores")
    cache_entries: int = Field(default_factory=lambda: config.CACHE_ENTRIES, ge=1, description="Character memo cap")
    max_n: int = Field(default_factory=lambda: config.MAX_N, ge=1, description="Largest size the oracle accepts")
    log_level: str = Field(default_factory=lambda: config.LOG_LEVEL, description="Console log level")
    quiet: bool = Field(False, description="Hide progress bars")
    report_timings: bool = Field(default_factory=lambda: config.REPORT_TIMINGS)

    # Policy overrides
    brute_force_size_cap: Optional[int] = Field(None, ge=1, description="Largest oracle-checked leaf size")
    audit_cap: Optional[int] = Field(None, ge=0, description="Axiom leaves up to this size are re-executed")
    extended: Optional[bool] = Field(None, description="Recompute manifest leaves")

    output_dir: Path = Field(default_factory=lambda: config.OUTPUT_DIR)

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level

    @classmethod
    def from_options(cls, **options: Any) -> "RunConfig":
        """Build from click options, dropping the ones the user did not set."""
        return cls(**{k: v for k, v in options.items() if v is not None})

    def policy(self) -> RulePolicy:
        return RulePolicy.from_config(
            brute_force_size_cap=self.brute_force_size_cap,
            audit_cap=self.audit_cap,
            extended=self.extended,
        )

    @property
    def numeric_log_level(self) -> int:
        return logging.getLevelName(self.log_level)

    def as_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
