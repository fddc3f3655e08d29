"""Runtime knobs."""

from __future__ import annotations

import os
from dataclasses import dataclass

NAIVE_LIMIT_ENV = "KNOTFORGE_NAIVE_LIMIT"


@dataclass(frozen=True)
class Settings:
    naive_limit: int = 20  # 2^20 states is about a million union-find passes
    orbit_limit: int = 10_000

    @classmethod
    def from_env(cls) -> "Settings":
        raw = os.environ.get(NAIVE_LIMIT_ENV)
        if raw is None:
            return cls()
        return cls(naive_limit=int(raw))
