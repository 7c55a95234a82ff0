"""
Application configuration and environment settings.
"""

import logging
from functools import lru_cache
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from TQBC_* environment variables (or a .env file)."""

    model_config = SettingsConfigDict(
        env_prefix="TQBC_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Scale caps
    max_worlds: int = Field(default=4, ge=1, description="Largest |W| for pair x candidate scans")
    enumeration_cap: int = Field(default=8, ge=1, description="Largest |W| enumerate_tpos accepts")
    max_atoms: int = Field(default=5, ge=1, le=8)

    # Harness
    random_schedules: int = Field(default=20, ge=0)
    schedule_seed: int = 7
    max_reported_violations: int = Field(default=25, ge=1)
    show_progress: bool = False

    log_level: str = "WARNING"

    # HTTP server
    app_env: str = "development"
    app_host: str = "127.0.0.1"
    app_port: int = 8000
    allowed_origins: str = "http://localhost:3000"

    @property
    def enumeration_limit(self) -> int:
        """TQBC_MAX_WORLDS lifts the enumeration cap as well."""
        return max(self.enumeration_cap, self.max_worlds)

    @property
    def max_sweep_atoms(self) -> int:
        """Operator sweeps enumerate 2**atoms worlds, so they share the world cap."""
        return max(1, self.max_worlds.bit_length() - 1)

    @property
    def cors_origins(self) -> List[str]:
        """Parse comma-separated origins into list."""
        return [origin.strip() for origin in self.allowed_origins.split(",")]

    @property
    def is_development(self) -> bool:
        return self.app_env == "development"


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def configure_logging(level: str = "") -> None:
    """Send kernel logs to stderr so stdout stays reserved for results."""
    settings = get_settings()
    logging.basicConfig(
        level=(level or settings.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


DEFAULT_ATOMS = ("p", "q", "r", "s", "t")

# Abstract-mode world names, taken from the tail so that four worlds read w, x, y, z
ABSTRACT_WORLD_LABELS = ("s", "t", "u", "v", "w", "x", "y", "z")

# Registered exhaustive checks: scale is "worlds" (|W|), "atoms" or "fixed"
THEOREM_CATALOG = {
    "prop1": {
        "scale": "atoms",
        "default_size": 2,
        "title": "EHI and EHIC agree wherever HI and LI hold",
        "domain": "all states over {size} atoms x every contraction operator x admissible A, B",
    },
    "prop2": {
        "scale": "atoms",
        "default_size": 2,
        "title": "Triviality of EHI",
        "domain": "the p,q witness under natural/restrained/lex revision; EHI-LB and HI over all states",
    },
    "prop3": {
        "scale": "worlds",
        "default_size": 3,
        "title": "UB <=> SPU+ and LB <=> WPU+",
        "domain": "all tpo pairs x all candidate outputs over {size} worlds",
    },
    "prop4": {
        "scale": "worlds",
        "default_size": 3,
        "title": "TeamQueue characterisation (no overtaking, trifurcation)",
        "domain": "all tpo pairs over {size} worlds x schedule family; candidate recovery when |W| <= 3",
    },
    "prop5": {
        "scale": "worlds",
        "default_size": 4,
        "title": "On S-variant pairs, HI + SPU+ + WPU+ imply NO",
        "domain": "all S-variant tpo pairs x all candidate outputs over {size} worlds",
    },
    "prop6": {
        "scale": "worlds",
        "default_size": 4,
        "title": "On S-variant pairs, SPU+ <=> SPU and WPU+ <=> WPU",
        "domain": "all S-variant tpo pairs x all candidate outputs over {size} worlds",
    },
    "prop7": {
        "scale": "atoms",
        "default_size": 2,
        "title": "CR*i transfers to CR/i through TeamQueue combination",
        "domain": "revision ops x schedule family x all states over {size} atoms x admissible A",
    },
    "prop8": {
        "scale": "atoms",
        "default_size": 2,
        "title": "Principled Factored Intersection",
        "domain": "revision ops x schedule family x all states over {size} atoms x admissible A, B",
    },
    "prop9": {
        "scale": "worlds",
        "default_size": 3,
        "title": "STQ is the only basic SPU+ / PAR combinator; PAR <=> SB",
        "domain": "all tpo pairs x all candidate outputs over {size} worlds",
    },
    "prop10": {
        "scale": "atoms",
        "default_size": 2,
        "title": "Natural and restrained revision under STQ give natural contraction",
        "domain": "all states over {size} atoms x all non-tautological A",
    },
    "lex-recovery": {
        "scale": "atoms",
        "default_size": 2,
        "title": "Lexicographic contraction = STQ(lex * A, lex * not-A)",
        "domain": "all states over {size} atoms x A neither tautology nor contradiction",
    },
    "priority-distinctness": {
        "scale": "atoms",
        "default_size": 2,
        "title": "Priority contraction via the right-biased combinator, and operator distinctness",
        "domain": "all states over {size} atoms x all non-tautological A",
    },
    "agm": {
        "scale": "atoms",
        "default_size": 2,
        "title": "AGM revision and contraction postulates",
        "domain": "all states over {size} atoms x every revision and contraction operator",
    },
    "examples": {
        "scale": "fixed",
        "default_size": 4,
        "title": "Worked examples over W = {w, x, y, z}",
        "domain": "the four worked examples: TeamQueue, S-variants, STQ, lex vs STQ-lex contraction",
    },
}
