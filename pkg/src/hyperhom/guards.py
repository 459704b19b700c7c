"""Resource guards for the exponential constructions.

Limits are multiplied by the ``HGH_GUARD_SCALE`` environment variable.
"""
from __future__ import annotations

import os

LIMITS = {
    "barycentric-edge-size": 8,
    "path-basis": 10**6,
    "magnitude-tuples": 10**6,
    "chromatic-edges": 16,
}


class ResourceGuardError(RuntimeError):
    def __init__(self, guard: str, value: int, limit: int):
        self.guard, self.value, self.limit = guard, value, limit
        super().__init__(f"resource guard '{guard}' tripped: {value} exceeds limit {limit}")


def limit(guard: str) -> int:
    scale = float(os.environ.get("HGH_GUARD_SCALE", "1") or 1)
    return int(LIMITS[guard] * scale)


def check(guard: str, value: int) -> None:
    lim = limit(guard)
    if value > lim:
        raise ResourceGuardError(guard, value, lim)
