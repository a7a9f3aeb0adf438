"""Enumeration limits.

Every exhaustive enumeration in the engine goes through :func:`guard`, so a
too-large instance fails deterministically with the same message instead of
grinding.  The cap can be raised or lowered through the SHIFTLAB_MAX_BLOCKS
environment variable.
"""

import os

from .errors import CapExceededError

DEFAULT_MAX_BLOCKS = 1 << 22

_ENV_VAR = "SHIFTLAB_MAX_BLOCKS"


def max_blocks() -> int:
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_BLOCKS
    try:
        return int(raw)
    except ValueError as exc:
        raise CapExceededError(f"{_ENV_VAR} must be an integer, got {raw!r}") from exc


def guard(count: int, what: str) -> None:
    cap = max_blocks()
    if count > cap:
        raise CapExceededError(
            f"{what}: {count} items exceed the cap of {cap} (set {_ENV_VAR} to raise it)"
        )
