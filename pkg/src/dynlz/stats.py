"""Primitive-call counters for the string-index backends.

Counters are grouped by the current phase label so the engine can attribute
calls to the updater that issued them.  Counting happens at the public index
API boundary; internal helper calls do not double count.
"""

from __future__ import annotations

PRIMITIVES = ("lcp", "lcs", "ipm", "exists", "first_occ", "last_occ",
              "clusters", "period")


class IndexStats:
    def __init__(self):
        self.phase = "idle"
        self.totals: dict[str, int] = {p: 0 for p in PRIMITIVES}
        self.by_phase: dict[str, dict[str, int]] = {}

    def count(self, primitive: str):
        self.totals[primitive] += 1
        bucket = self.by_phase.get(self.phase)
        if bucket is None:
            bucket = self.by_phase[self.phase] = dict.fromkeys(PRIMITIVES, 0)
        bucket[primitive] += 1

    def reset(self):
        self.totals = {p: 0 for p in PRIMITIVES}
        self.by_phase = {}

    def total_calls(self) -> int:
        return sum(self.totals.values())

    def snapshot(self) -> dict:
        return {
            "totals": dict(self.totals),
            "by_phase": {ph: dict(b) for ph, b in self.by_phase.items()},
        }

    def phase_totals(self) -> dict[str, int]:
        return {ph: sum(b.values()) for ph, b in self.by_phase.items()}
