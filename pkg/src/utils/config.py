"""
Configuration: parse environment into immutable AppConfig (no import-time globals).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from dotenv import load_dotenv

from src.utils.logger import get_logger

logger = get_logger(__name__)

# Largest graph (vertex count) the exact solver enumerates by default.
DEFAULT_MAX_VERTICES = 12
DEFAULT_MAX_TREES = 10**7
DEFAULT_TIME_CAP_SECONDS = 300.0
# Random spanning trees sampled per graph by `verify` when no tree is given.
DEFAULT_SAMPLES = 100


class ConfigError(ValueError):
    """Raised when configuration is missing or invalid."""


@dataclass(frozen=True)
class SolverConfig:
    """Resource caps for the exact solver."""

    max_vertices: int = DEFAULT_MAX_VERTICES
    max_trees: int = DEFAULT_MAX_TREES
    time_cap_seconds: float = DEFAULT_TIME_CAP_SECONDS
    jobs: int = 1


@dataclass(frozen=True)
class SamplingConfig:
    """Seeded random spanning-tree sampling."""

    seed: int = 0
    samples: int = DEFAULT_SAMPLES


@dataclass(frozen=True)
class AppConfig:
    """Application-wide configuration."""

    solver: SolverConfig
    sampling: SamplingConfig


def apply_dotenv(dotenv_path: Optional[Path] = None) -> None:
    """Load ``.env`` from the working directory once (call from CLI ``main``)."""
    path = dotenv_path if dotenv_path is not None else Path(".env")
    if path.exists():
        logger.info(f"Loading environment from {path.absolute()}")
        load_dotenv(path)
    else:
        logger.debug(f".env file not found at {path.absolute()}")


def _get_int(env: Mapping[str, str], key: str, default: int) -> int:
    raw = env.get(key)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise ConfigError(f"{key} must be a valid integer (got {raw!r})") from e


def _get_float(env: Mapping[str, str], key: str, default: float) -> float:
    raw = env.get(key)
    if raw is None or raw == "":
        return default
    try:
        return float(raw)
    except ValueError as e:
        raise ConfigError(f"{key} must be a valid float (got {raw!r})") from e


def load_config(env: Mapping[str, str] | None = None) -> AppConfig:
    """
    Build AppConfig from environment variables.

    Does not read ``.env``; call :func:`apply_dotenv` first if needed.

    Args:
        env: Mapping to read (default: ``os.environ``).

    Returns:
        Parsed configuration.
    """
    e = env if env is not None else os.environ

    max_vertices = _get_int(e, "TREESTRETCH_MAX_VERTICES", DEFAULT_MAX_VERTICES)
    max_trees = _get_int(e, "TREESTRETCH_MAX_TREES", DEFAULT_MAX_TREES)
    time_cap = _get_float(e, "TREESTRETCH_TIME_CAP", DEFAULT_TIME_CAP_SECONDS)
    jobs = _get_int(e, "TREESTRETCH_JOBS", 1)
    if max_vertices < 1:
        raise ConfigError("TREESTRETCH_MAX_VERTICES must be >= 1")
    if max_trees < 1:
        raise ConfigError("TREESTRETCH_MAX_TREES must be >= 1")
    if time_cap <= 0:
        raise ConfigError("TREESTRETCH_TIME_CAP must be > 0")
    if jobs < 1:
        raise ConfigError("TREESTRETCH_JOBS must be >= 1")

    seed = _get_int(e, "TREESTRETCH_SEED", 0)
    samples = _get_int(e, "TREESTRETCH_SAMPLES", DEFAULT_SAMPLES)
    if samples < 1:
        raise ConfigError("TREESTRETCH_SAMPLES must be >= 1")

    return AppConfig(
        solver=SolverConfig(
            max_vertices=max_vertices,
            max_trees=max_trees,
            time_cap_seconds=time_cap,
            jobs=jobs,
        ),
        sampling=SamplingConfig(seed=seed, samples=samples),
    )
