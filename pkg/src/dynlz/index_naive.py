"""Deterministic reference backend: every query is a direct scan of the text.

No hashing anywhere, so this is the ground-truth side of the backend
equivalence tests.  Costs are linear-ish per query, fine for the sizes the
tests and the gadget driver use.
"""

from __future__ import annotations

from .index_common import BaseIndex, Cluster, group_into_clusters, min_period


class NaiveIndex(BaseIndex):
    backend = "naive"

    def _lcp(self, i: int, j: int) -> int:
        t = self.text
        i0, j0 = i - 1, j - 1
        limit = len(t) - max(i0, j0)
        lo, hi = 0, limit
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if t[i0:i0 + mid] == t[j0:j0 + mid]:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def _lcs(self, i: int, j: int) -> int:
        t = self.text
        limit = min(i, j)
        lo, hi = 0, limit
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if t[i - mid:i] == t[j - mid:j]:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def _occurrences(self, pat, text) -> list[int]:
        t = self.text
        p = t[pat[0] - 1:pat[1]]
        lo, hi = text[0] - 1, text[1]
        out = []
        k = t.find(p, lo, hi)
        while k != -1:
            out.append(k + 1)
            k = t.find(p, k + 1, hi)
        return out

    def _exists(self, pat, text) -> bool:
        t = self.text
        return t.find(t[pat[0] - 1:pat[1]], text[0] - 1, text[1]) != -1

    def _first_occ(self, pat, text):
        t = self.text
        k = t.find(t[pat[0] - 1:pat[1]], text[0] - 1, text[1])
        return None if k == -1 else k + 1

    def _last_occ(self, pat, text):
        t = self.text
        k = t.rfind(t[pat[0] - 1:pat[1]], text[0] - 1, text[1])
        return None if k == -1 else k + 1

    def _ipm(self, pat, text):
        occ = self._occurrences(pat, text)
        if not occ:
            return []
        p = min_period(self.text[pat[0] - 1:pat[1]])
        rel = [k - text[0] + 1 for k in occ]
        return [(c.a, c.b, c.p) for c in group_into_clusters(rel, p)]

    def _clusters(self, pat, text) -> list[Cluster]:
        occ = self._occurrences(pat, text)
        if not occ:
            return []
        p = min_period(self.text[pat[0] - 1:pat[1]])
        return group_into_clusters(occ, p)
