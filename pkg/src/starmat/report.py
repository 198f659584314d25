from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one property run; reproducible from (property, seed, trials, backend)."""

    property: str
    backend: str
    trials: int
    seed: int
    mode: str = "random"  # random | exhaustive | exact
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures
