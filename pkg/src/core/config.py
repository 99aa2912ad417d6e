import os
import sys
import logging
from pathlib import Path
from dotenv import load_dotenv

from src.core.exceptions import ConfigError

load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
DEFAULT_MAX_X = 50.0


def setup_logging(level=None):
    """Configure root logging; stdout stays reserved for JSON/CSV output."""
    level = (level or os.getenv("HOLEVO_LOG_LEVEL", "INFO")).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigError(f"HOLEVO_LOG_LEVEL must be a logging level name, got {level!r}")

    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = os.getenv("HOLEVO_LOG_FILE", "")
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def _env_int(name, default, minimum):
    raw = os.getenv(name, "")
    if not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _env_float(name, default):
    raw = os.getenv(name, "")
    if not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number, got {raw!r}")
    if not value > 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


class Config:
    def __init__(self):
        threads = _env_int("HOLEVO_THREADS", 0, 1)
        self.THREADS = threads or min(4, os.cpu_count() or 1)
        self.GRID_POINTS = _env_int("HOLEVO_GRID_POINTS", 20000, 1000)
        self.REFINE_ITERS = _env_int("HOLEVO_REFINE_ITERS", 200, 1)
        self.REFINE_TOL = _env_float("HOLEVO_REFINE_TOL", 1e-10)
        self.MAX_X = _env_float("HOLEVO_MAX_X", DEFAULT_MAX_X)
        self.LOG_LEVEL = os.getenv("HOLEVO_LOG_LEVEL", "INFO").upper()
        self.LOG_FILE = os.getenv("HOLEVO_LOG_FILE", "")

        # Sweep defaults
        self.WERNER_X_LIST = (0.25, 2.5)
        self.WERNER_Z_GRID = (0.0, 1.0, 101)
        self.GAD_X_LIST = (0.5, 1.0)
        self.GAD_Z_GRID = (0.0, 1.0, 51)
        self.GAD_GAMMA_GRID = (0.01, 0.99, 51)

        self.VERIFY_SEED = 2016
        self.VERIFY_SAMPLES = 200

