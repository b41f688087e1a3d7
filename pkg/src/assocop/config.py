from __future__ import annotations

import os
from dataclasses import dataclass


class DegreeCapExceeded(RuntimeError):
    pass


@dataclass
class Limits:
    """Global resource limits. Posets are materialized whole, so n! matters."""

    max_degree: int = 8
    cache_dir: str | None = None

    def check(self, n: int) -> None:
        if n > self.max_degree:
            raise DegreeCapExceeded(
                f"degree {n} exceeds the cap {self.max_degree}; raise it explicitly"
            )


LIMITS = Limits(cache_dir=os.environ.get("ASSOCOP_CACHE_DIR"))
