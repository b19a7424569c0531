"""Global size guards, overridable through environment variables."""

from __future__ import annotations

import os

from pointfree.errors import TooLarge


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


MAX_CARRIER = _env_int("POINTFREE_MAX_CARRIER", 1 << 16)
MAX_CANDIDATES = _env_int("POINTFREE_MAX_CANDIDATES", 1 << 12)
MAX_POINTS = _env_int("POINTFREE_MAX_POINTS", 4)
MAX_ATOMS = _env_int("POINTFREE_MAX_ATOMS", 16)


def check_carrier(n: int, what: str = "carrier") -> None:
    if n > MAX_CARRIER:
        raise TooLarge(f"{what} has {n} elements; guard is {MAX_CARRIER}")


def check_candidates(n: int, what: str = "search") -> None:
    if n > MAX_CANDIDATES:
        raise TooLarge(f"{what} needs {n} candidates; guard is {MAX_CANDIDATES}")
