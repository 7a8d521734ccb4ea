# src/skeintail/config.py
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Dict


@dataclass(frozen=True)
class Limits:
    """Tunable bounds shared by the evaluators and the tail checks."""
    brute_limit: int = 24      # crossings enumerated by the state-sum oracle
    width_cap: int = 16        # peak sweep width accepted by transfer evaluation
    jw_max: int = 8            # largest projector the evaluator will build
    window: int = 3            # tail coefficients compared per level

    def with_overrides(self, **changes: Any) -> "Limits":
        kept = {k: v for k, v in changes.items() if v is not None}
        return replace(self, **kept)

    def as_dict(self) -> Dict[str, int]:
        return {
            "brute_limit": self.brute_limit,
            "width_cap": self.width_cap,
            "jw_max": self.jw_max,
            "window": self.window,
        }


DEFAULT_LIMITS = Limits()
