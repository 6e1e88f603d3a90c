"""
Runtime settings
================
Caps and worker counts read from the environment (a local .env file is
honoured through python-dotenv).
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int, override: Optional[str] = None) -> int:
    raw = override if override is not None else os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    automorphism_cap: int = 24
    enumeration_cap: int = 12
    brace_cap: int = 8
    workers: int = 4
    log_level: str = "WARNING"


def get_settings() -> Settings:
    """Read settings fresh from the environment.

    BRACOID_ORDER_CAP, when set, overrides every individual cap.
    """
    blanket = os.getenv("BRACOID_ORDER_CAP")
    if blanket is not None and blanket.strip() == "":
        blanket = None
    return Settings(
        automorphism_cap=_int_env("BRACOID_AUTOMORPHISM_CAP", 24, blanket),
        enumeration_cap=_int_env("BRACOID_ENUMERATION_CAP", 12, blanket),
        brace_cap=_int_env("BRACOID_BRACE_CAP", 8, blanket),
        workers=_int_env("BRACOID_WORKERS", 4),
        log_level=os.getenv("BRACOID_LOG_LEVEL", "WARNING").upper(),
    )
