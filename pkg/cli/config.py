"""
CLI Configuration

Settings come from the environment (optionally a .env file) and every
one of them has a default, so pushcalc runs with no configuration at all.

Student Guide:
--------------
Variables:
- LOG_LEVEL                 logging level name (INFO)
- PUSHCALC_DEFAULT_ORDER    truncation order when --order is omitted (6)
- PUSHCALC_DEFAULT_WINDOW   lattice window when --window is omitted (3)
- PUSHCALC_JOBS             worker processes for sweeps (1)
- PUSHCALC_SEED             seed for every randomized sweep (20240601)
- PUSHCALC_PROGRESS         1 shows tqdm progress bars on stderr (0)

Why a singleton?
- load_dotenv() and parsing happen once per process
- handlers call get_settings() instead of reading os.environ themselves

Example usage:
    from cli.config import get_settings, setup_logging

    settings = get_settings()
    setup_logging(settings.log_level)
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

_settings_instance: Optional["Settings"] = None


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    default_order: int = 6
    default_window: int = 3
    jobs: int = 1
    seed: int = 20240601
    progress: bool = False


def _int_env(name: str, default: int, minimum: Optional[int] = None) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def _bool_env(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    if raw.strip() in ("0", "1"):
        return raw.strip() == "1"
    raise ValueError(f"{name} must be 0 or 1, got {raw!r}")


def load_settings() -> Settings:
    """
    Read Settings from the environment.

    Raises:
        ValueError: If a variable holds an invalid value (the message names it)
    """
    load_dotenv()
    level = os.getenv("LOG_LEVEL", "INFO").upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"LOG_LEVEL must be a logging level name, got {level!r}")
    return Settings(
        log_level=level,
        default_order=_int_env("PUSHCALC_DEFAULT_ORDER", 6, minimum=0),
        default_window=_int_env("PUSHCALC_DEFAULT_WINDOW", 3, minimum=0),
        jobs=_int_env("PUSHCALC_JOBS", 1, minimum=1),
        seed=_int_env("PUSHCALC_SEED", 20240601),
        progress=_bool_env("PUSHCALC_PROGRESS", False),
    )


def get_settings() -> Settings:
    """
    Get the process-wide Settings instance.

    Example:
        get_settings().default_order   # 6 unless PUSHCALC_DEFAULT_ORDER is set
    """
    global _settings_instance

    if _settings_instance is None:
        _settings_instance = load_settings()

    return _settings_instance


def reset_settings() -> None:
    """Forget the cached Settings (tests change the environment between calls)."""
    global _settings_instance
    _settings_instance = None


def setup_logging(level: str = "INFO") -> None:
    # stderr only: stdout carries the JSON output
    logging.basicConfig(level=level, format=LOG_FORMAT, force=True)
