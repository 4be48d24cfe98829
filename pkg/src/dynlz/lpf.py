"""Longest-previous-factor queries on top of a string-index backend.

lpf(i) is the clamped value max(LPF(i), 1) that the phrase structure uses;
lpf_raw exposes the unclamped maximum, and lpfpos the rightmost witness
(diagnostics only).  Values are found by a galloping-then-binary search on
substring-existence queries, and memoized until the underlying string
changes.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LpfAnswer:
    lpf: int
    lpf_clamped: int
    lpfpos: int | None


class LpfQueries:
    def __init__(self, index):
        self.index = index
        self._cache: dict[int, int] = {}
        self._cache_version = -1

    def _occurs_before(self, i: int, ell: int) -> bool:
        """Does s[i..i+ell) occur starting strictly before i?"""
        return self.index.exists((i, i + ell - 1), (1, i + ell - 2))

    def lpf_raw(self, i: int) -> int:
        idx = self.index
        if idx.version != self._cache_version:
            self._cache = {}
            self._cache_version = idx.version
        hit = self._cache.get(i)
        if hit is not None:
            return hit
        n = len(idx)
        if not (1 <= i <= n):
            raise IndexError(f"position {i} out of range 1..{n}")
        limit = n - i + 1
        if not self._occurs_before(i, 1):
            self._cache[i] = 0
            return 0
        lo, hi = 1, None
        while lo < limit:
            cand = min(limit, lo * 2)
            if self._occurs_before(i, cand):
                lo = cand
            else:
                hi = cand
                break
        if hi is not None:
            while lo + 1 < hi:
                mid = (lo + hi) // 2
                if self._occurs_before(i, mid):
                    lo = mid
                else:
                    hi = mid
        self._cache[i] = lo
        return lo

    def lpf(self, i: int) -> int:
        return max(self.lpf_raw(i), 1)

    def jump(self, i: int) -> int:
        """Start of the next phrase if a phrase started at i."""
        return i + self.lpf(i)

    def lpfpos(self, i: int) -> int | None:
        ell = self.lpf_raw(i)
        if ell == 0:
            return None
        return self.index.last_occ((i, i + ell - 1), (1, i + ell - 2))

    def answer(self, i: int) -> LpfAnswer:
        raw = self.lpf_raw(i)
        return LpfAnswer(raw, max(raw, 1), self.lpfpos(i))
