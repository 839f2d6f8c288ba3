from __future__ import annotations

import os

from .config import logger
from .errors import ArgumentError


def save_output(path: str, text: str) -> None:
    """Write rendered command output to a file, creating parent directories."""
    try:
        parent = os.path.dirname(os.path.abspath(path))
        os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
            if not text.endswith("\n"):
                f.write("\n")
        logger.debug(f"Output saved to {path}")
    except OSError as e:
        logger.error(f"Could not save output to {path}: {e}")
        raise ArgumentError(f"cannot write --out file {path!r}: {e}") from e
