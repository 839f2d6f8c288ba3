import os
import sys
import logging
import threading
from functools import wraps
from pathlib import Path
from typing import Any, Callable, Dict, Hashable, Optional

from cachetools import LRUCache

ENV_FILE = Path(__file__).resolve().parent.parent / ".env"


def parse_env_file(path: Path) -> Dict[str, str]:
    """Read KEY=VALUE lines; blank lines, comments and an `export ` prefix are skipped."""
    values: Dict[str, str] = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#") or "=" not in line:
            continue
        key, value = line.split("=", 1)
        key = key.strip()
        if key.startswith("export "):
            key = key[len("export "):].strip()
        value = value.strip()
        if value[:1] in ("'", '"') and value[:1] in value[1:]:
            value = value[1:value.index(value[0], 1)]
        else:
            value = value.split(" #", 1)[0].rstrip()
        values[key] = value
    return values


def load_env(path: Optional[Path] = None) -> bool:
    """Load SQUIG_* settings and LOG_LEVEL from a .env file into os.environ.

    Variables already set in the environment win over the file. Uses
    python-dotenv when installed, else parse_env_file. Returns whether a
    file was read.
    """
    env_path = Path(path) if path is not None else ENV_FILE
    if not env_path.is_file():
        return False

    try:
        from dotenv import load_dotenv
    except ImportError:
        load_dotenv = None

    if load_dotenv is not None:
        load_dotenv(env_path, override=False)
        return True

    try:
        for key, value in parse_env_file(env_path).items():
            os.environ.setdefault(key, value)
    except (OSError, UnicodeDecodeError) as e:
        print(f"⚠️ Could not read {env_path}: {e}", file=sys.stderr)
        return False
    return True


# Load env early
load_env()

# Logging configuration (stderr, so command output on stdout stays clean)
log_level = os.getenv("LOG_LEVEL", "WARNING").upper()
logging.basicConfig(
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    level=getattr(logging, log_level, logging.WARNING),
)
logger = logging.getLogger("squigonometry")

# Reduce noisy libraries
logging.getLogger("numpy").setLevel(logging.WARNING)
logging.getLogger("scipy").setLevel(logging.WARNING)


class Config:
    """Numerical defaults, overridable from the environment."""

    # Quadrature
    TOL: float = float(os.getenv("SQUIG_TOL", "1e-12"))
    MAX_LEVELS: int = int(os.getenv("SQUIG_MAX_LEVELS", "10"))

    # Monte Carlo
    MC_WORKERS: int = int(os.getenv("SQUIG_MC_WORKERS", "1"))
    MC_CHUNK: int = int(os.getenv("SQUIG_MC_CHUNK", "1000000"))

    # Memo caches
    CACHE_SIZE: int = int(os.getenv("SQUIG_CACHE_SIZE", "512"))

    # Accepted ranges for a quadrature configuration
    MIN_TOL: float = 1e-14
    MAX_TOL: float = 1e-4
    MIN_LEVELS: int = 3
    MAX_LEVELS_LIMIT: int = 12

    @classmethod
    def validate_config(cls) -> None:
        if not (cls.MIN_TOL <= cls.TOL <= cls.MAX_TOL):
            raise ValueError(
                f"SQUIG_TOL must lie in [{cls.MIN_TOL:g}, {cls.MAX_TOL:g}], got {cls.TOL:g}"
            )
        if not (cls.MIN_LEVELS <= cls.MAX_LEVELS <= cls.MAX_LEVELS_LIMIT):
            raise ValueError(
                f"SQUIG_MAX_LEVELS must lie in [{cls.MIN_LEVELS}, {cls.MAX_LEVELS_LIMIT}], got {cls.MAX_LEVELS}"
            )
        if cls.MC_WORKERS < 1:
            raise ValueError("SQUIG_MC_WORKERS must be at least 1")
        if cls.MC_CHUNK < 1:
            raise ValueError("SQUIG_MC_CHUNK must be at least 1")
        if cls.CACHE_SIZE < 1:
            raise ValueError("SQUIG_CACHE_SIZE must be at least 1")


# Initialize and expose commonly used constants
config = Config()
config.validate_config()
DEFAULT_TOL = config.TOL
DEFAULT_MAX_LEVELS = config.MAX_LEVELS
MC_WORKERS = config.MC_WORKERS
MC_CHUNK = config.MC_CHUNK
CACHE_SIZE = config.CACHE_SIZE


def cached_computation(cache_key_func: Callable[..., Hashable], maxsize: int = CACHE_SIZE):
    """
    Decorator memoizing a pure computation in its own LRU cache.

    Args:
        cache_key_func: Function that generates cache key from function arguments
        maxsize: Number of entries kept before least-recently-used eviction

    Keys are typed: 2, 2.0 and True are cached apart, so argument checks in
    the wrapped function run for every new argument type.
    """
    def decorator(func: Callable):
        cache: LRUCache = LRUCache(maxsize=maxsize)
        lock = threading.RLock()

        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any):
            key = (
                cache_key_func(*args, **kwargs),
                tuple(type(a) for a in args),
                tuple(sorted((k, type(v)) for k, v in kwargs.items())),
            )

            with lock:
                if key in cache:
                    logger.debug(f"Cache hit for {func.__name__}: {key}")
                    return cache[key]

            logger.debug(f"Cache miss, computing {func.__name__}: {key}")
            result = func(*args, **kwargs)

            with lock:
                cache[key] = result
            return result

        def cache_clear() -> None:
            with lock:
                cache.clear()

        wrapper.cache = cache  # type: ignore[attr-defined]
        wrapper.cache_clear = cache_clear  # type: ignore[attr-defined]
        return wrapper
    return decorator
