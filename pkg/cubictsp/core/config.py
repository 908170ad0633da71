# File: cubictsp/core/config.py
"""
Runtime configuration.

Values come from the environment (prefix CUBICTSP_) or a local .env file and
can be overridden per command through CLI flags.
"""

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import PositiveFloat, PositiveInt
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="CUBICTSP_", env_file=".env", extra="ignore")

    # exhaustive enumeration cap, as a cycle-space dimension (2**enum_budget factors)
    enum_budget: PositiveInt = 20
    oracle_budget: PositiveInt = 18
    symmetry_budget: PositiveInt = 16
    bnb_node_budget: PositiveInt = 2_000_000
    # largest family member built, and largest header accepted from a graph file
    family_vertex_limit: PositiveInt = 50_000

    log_level: str = "INFO"
    log_dir: str = "logs"
    debug_mode: bool = False
    perf_threshold: PositiveFloat = 1.0


@lru_cache
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
