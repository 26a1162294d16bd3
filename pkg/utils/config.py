"""
Toolkit settings
Reads GRK_* environment variables (optionally from a .env file) into a
validated settings model shared by the library and the command line.
"""

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


class GrkSettings(BaseModel):
    """Limits and switches for the state sums, homology and search."""

    state_limit: int = Field(default=20, ge=0, le=30)
    homology_limit: int = Field(default=14, ge=0, le=20)
    iso_limit: int = Field(default=16, ge=1)
    tait_edge_limit: int = Field(default=20, ge=1)
    matching_vertex_limit: int = Field(default=20, ge=2)
    search_depth: int = Field(default=6, ge=0)
    search_nodes: int = Field(default=200000, ge=1)
    max_prime: int = Field(default=97, ge=3)
    check_dd: bool = True
    log_level: str = "INFO"
    log_dir: str = "logs"
    log_file: bool = False
    workers: int = Field(default=4, ge=1)


@lru_cache(maxsize=1)
def get_settings() -> GrkSettings:
    """Load settings once per process."""
    load_dotenv()
    return GrkSettings(
        state_limit=int(os.getenv("GRK_STATE_LIMIT", "20")),
        homology_limit=int(os.getenv("GRK_HOMOLOGY_LIMIT", "14")),
        iso_limit=int(os.getenv("GRK_ISO_LIMIT", "16")),
        tait_edge_limit=int(os.getenv("GRK_TAIT_EDGE_LIMIT", "20")),
        matching_vertex_limit=int(os.getenv("GRK_MATCHING_VERTEX_LIMIT", "20")),
        search_depth=int(os.getenv("GRK_SEARCH_DEPTH", "6")),
        search_nodes=int(os.getenv("GRK_SEARCH_NODES", "200000")),
        max_prime=int(os.getenv("GRK_MAX_PRIME", "97")),
        check_dd=_env_bool("GRK_CHECK_DD", True),
        log_level=os.getenv("GRK_LOG_LEVEL", "INFO"),
        log_dir=os.getenv("GRK_LOG_DIR", "logs"),
        log_file=_env_bool("GRK_LOG_FILE", False),
        workers=int(os.getenv("GRK_WORKERS", "4")),
    )
