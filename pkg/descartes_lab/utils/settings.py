from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

from descartes_lab.utils.logging import resolve_level


def _default_threads() -> int:
    return min(8, os.cpu_count() or 1)


class LabSettings(BaseModel):
    """Runtime knobs, overridable through DESCARTES_LAB_* environment variables."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    threads: int = Field(default_factory=_default_threads, ge=1)
    max_catalog_degree: int = Field(default=16, ge=1)
    max_couple_degree: int = Field(default=64, ge=1)
    halving_budget: int = Field(default=64, ge=1)
    oracle_budget: int = Field(default=20000, ge=0)
    max_search_budget: int = Field(default=1_000_000, ge=0)
    enclosure_width: Fraction = Field(default=Fraction(1, 10**6))
    seed: int = 0
    log_level: str = "INFO"

    @field_validator("enclosure_width", mode="before")
    @classmethod
    def _parse_width(cls, value: object) -> Fraction:
        width = Fraction(str(value)) if not isinstance(value, Fraction) else value
        if width <= 0:
            raise ValueError("enclosure width must be positive")
        return width

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        resolve_level(value)
        return value.strip().upper()


_ENV_FIELDS = {
    "threads": "DESCARTES_LAB_THREADS",
    "max_catalog_degree": "DESCARTES_LAB_MAX_DEGREE",
    "halving_budget": "DESCARTES_LAB_HALVING_BUDGET",
    "oracle_budget": "DESCARTES_LAB_ORACLE_BUDGET",
    "enclosure_width": "DESCARTES_LAB_ENCLOSURE_WIDTH",
    "seed": "DESCARTES_LAB_SEED",
    "log_level": "DESCARTES_LAB_LOG_LEVEL",
}


def load_settings() -> LabSettings:
    load_dotenv()
    values = {field: os.getenv(env) for field, env in _ENV_FIELDS.items()}
    return LabSettings(**{field: value for field, value in values.items() if value not in (None, "")})


@lru_cache(maxsize=1)
def get_settings() -> LabSettings:
    return load_settings()
