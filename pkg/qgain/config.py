import os
from typing import List

from dotenv import load_dotenv

from .utils.exceptions import ConfigurationError

load_dotenv()


def _env_int(key: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(key)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(key, f"{key} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigurationError(key, f"{key} must be >= {minimum}, got {value}")
    return value


def _env_float(key: str, default: float) -> float:
    raw = os.environ.get(key)
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigurationError(key, f"{key} must be a number, got {raw!r}")
    if value <= 0:
        raise ConfigurationError(key, f"{key} must be positive, got {value}")
    return value


class Config:
    """Centralized configuration management"""
    # Logging
    LOG_LEVEL = os.environ.get("QGAIN_LOG_LEVEL", "WARNING").upper()
    LOG_FORMAT = os.environ.get("QGAIN_LOG_FORMAT", "%(asctime)s %(levelname)s %(message)s")

    # Exact sampling of unit gains: pure quaternions with |num|, den <= bound
    CAYLEY_BOUND = _env_int("QGAIN_CAYLEY_BOUND", 8, minimum=1)

    # Float mode
    FLOAT_PIVOT_TOL = _env_float("QGAIN_FLOAT_PIVOT_TOL", 1e-9)
    UNIT_TOL = _env_float("QGAIN_UNIT_TOL", 1e-9)

    # Sampling within an (n, c, p) cell
    SAMPLE_RETRY_BUDGET = _env_int("QGAIN_SAMPLE_RETRY_BUDGET", 1000, minimum=1)

    # Reporting
    CYCLE_INVENTORY_LIMIT = _env_int("QGAIN_CYCLE_INVENTORY_LIMIT", 64, minimum=1)
    DIGEST_ALGORITHM = os.environ.get("QGAIN_DIGEST_ALGORITHM", "sha256")

    # Run defaults (the seed is never read from the environment)
    DEFAULT_SAMPLES = _env_int("QGAIN_DEFAULT_SAMPLES", 200, minimum=1)
    DEFAULT_MAX_N = _env_int("QGAIN_DEFAULT_MAX_N", 10, minimum=2)
    DEFAULT_MAX_C = _env_int("QGAIN_DEFAULT_MAX_C", 4, minimum=0)
    DEFAULT_WORKERS = _env_int("QGAIN_DEFAULT_WORKERS", 1, minimum=1)

    # HTTP surface
    API_PREFIX = os.environ.get("QGAIN_API_PREFIX", "/v1")
    CORS_ORIGINS = os.environ.get("QGAIN_CORS_ORIGINS", "*")

    @classmethod
    def get_cors_origins(cls) -> List[str]:
        """Get the allowed CORS origins as a list"""
        return [origin.strip() for origin in cls.CORS_ORIGINS.split(",") if origin.strip()]
