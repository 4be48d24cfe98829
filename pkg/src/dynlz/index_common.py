"""Shared contract for the string-index backends.

A backend wraps one DynString plus whatever derived structures it needs, and
answers substring queries over the current content.  All positions in the
public API are absolute 1-based ranks; ranges are inclusive (i, j) pairs.
ipm results are 1-based offsets relative to the queried text; clusters are
absolute.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dynstr import DynString, EditOp, EditReceipt
from .stats import IndexStats


@dataclass(frozen=True)
class Cluster:
    """Occurrences of a pattern inside one run: a, a+p, ..., b (absolute)."""
    a: int
    b: int
    p: int

    def positions(self) -> list[int]:
        return list(range(self.a, self.b + 1, self.p))

    def __post_init__(self):
        if self.a > self.b or self.p <= 0 or (self.b - self.a) % self.p:
            raise ValueError(f"bad cluster ({self.a},{self.b},{self.p})")


def prefix_function(s: str) -> list[int]:
    pi = [0] * len(s)
    k = 0
    for q in range(1, len(s)):
        while k and s[q] != s[k]:
            k = pi[k - 1]
        if s[q] == s[k]:
            k += 1
        pi[q] = k
    return pi


def min_period(s: str) -> int:
    if not s:
        raise ValueError("empty pattern has no period")
    pi = prefix_function(s)
    return len(s) - pi[-1]


def group_into_clusters(occ: list[int], p: int) -> list[Cluster]:
    """Group sorted occurrence starts into maximal difference-p progressions."""
    out: list[Cluster] = []
    k = 0
    while k < len(occ):
        a = occ[k]
        while k + 1 < len(occ) and occ[k + 1] - occ[k] == p:
            k += 1
        out.append(Cluster(a, occ[k], p))
        k += 1
    return out


class BaseIndex:
    """Mirror maintenance, validation, and counting; subclasses answer."""

    backend = "base"

    def __init__(self, symbols=(), stats: IndexStats | None = None, seed: int = 0,
                 alphabet_bound: int | None = None, debug_checks: bool = False):
        kwargs = {} if alphabet_bound is None else {"alphabet_bound": alphabet_bound}
        self.ds = DynString(symbols, seed=seed, **kwargs)
        self.text = "".join(map(chr, symbols))
        self.stats = stats if stats is not None else IndexStats()
        self.debug_checks = debug_checks
        self.version = 0

    # -- state -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.ds)

    def apply_edit(self, op: EditOp) -> EditReceipt:
        receipt = self.ds.apply_edit(op)
        t, p = self.text, op.pos - 1
        if op.kind.value == "I":
            self.text = t[:p] + chr(op.symbol) + t[p:]
        elif op.kind.value == "D":
            self.text = t[:p] + t[p + 1:]
        else:
            self.text = t[:p] + chr(op.symbol) + t[p + 1:]
        self.version += 1
        self._after_edit(op, receipt)
        return receipt

    def _after_edit(self, op: EditOp, receipt: EditReceipt):
        pass

    # -- validation helpers --------------------------------------------------

    def _check_pos(self, i: int):
        if not (1 <= i <= len(self)):
            raise IndexError(f"position {i} out of range 1..{len(self)}")

    def _check_range(self, i: int, j: int, what: str, nonempty: bool = True):
        if nonempty and i > j:
            raise ValueError(f"empty {what} range [{i}..{j}]")
        if i > j:
            return
        if not (1 <= i and j <= len(self)):
            raise IndexError(f"{what} range [{i}..{j}] out of 1..{len(self)}")

    # -- public query API ----------------------------------------------------

    def lcp(self, i: int, j: int) -> int:
        self._check_pos(i)
        self._check_pos(j)
        self.stats.count("lcp")
        return self._lcp(i, j)

    def lcs(self, i: int, j: int) -> int:
        self._check_pos(i)
        self._check_pos(j)
        self.stats.count("lcs")
        return self._lcs(i, j)

    def exists(self, pat: tuple[int, int], text: tuple[int, int]) -> bool:
        self._check_range(*pat, "pattern")
        self._check_range(*text, "text", nonempty=False)
        self.stats.count("exists")
        if text[0] > text[1] or text[1] - text[0] < pat[1] - pat[0]:
            return False
        return self._exists(pat, text)

    def first_occ(self, pat: tuple[int, int], text: tuple[int, int]) -> int | None:
        self._check_range(*pat, "pattern")
        self._check_range(*text, "text", nonempty=False)
        self.stats.count("first_occ")
        if text[0] > text[1] or text[1] - text[0] < pat[1] - pat[0]:
            return None
        return self._first_occ(pat, text)

    def last_occ(self, pat: tuple[int, int], text: tuple[int, int]) -> int | None:
        self._check_range(*pat, "pattern")
        self._check_range(*text, "text", nonempty=False)
        self.stats.count("last_occ")
        if text[0] > text[1] or text[1] - text[0] < pat[1] - pat[0]:
            return None
        return self._last_occ(pat, text)

    def ipm(self, pat: tuple[int, int], text: tuple[int, int]) -> list[tuple[int, int, int]]:
        self._check_range(*pat, "pattern")
        self._check_range(*text, "text")
        plen = pat[1] - pat[0] + 1
        tlen = text[1] - text[0] + 1
        if tlen > 2 * plen:
            raise ValueError(f"ipm text length {tlen} exceeds 2x pattern {plen}")
        self.stats.count("ipm")
        return self._ipm(pat, text)

    def clusters(self, pat: tuple[int, int], text: tuple[int, int]) -> list[Cluster]:
        self._check_range(*pat, "pattern")
        self._check_range(*text, "text", nonempty=False)
        self.stats.count("clusters")
        if text[0] > text[1] or text[1] - text[0] < pat[1] - pat[0]:
            return []
        return self._clusters(pat, text)

    def period(self, pat: tuple[int, int]) -> int:
        self._check_range(*pat, "pattern")
        self.stats.count("period")
        return min_period(self.text[pat[0] - 1:pat[1]])

    # -- passthrough -----------------------------------------------------------

    def rank(self, node) -> int:
        return self.ds.rank(node)

    def select(self, i: int):
        return self.ds.select(i)

    def char_at(self, i: int) -> int:
        self._check_pos(i)
        return ord(self.text[i - 1])

    def symbols(self) -> list[int]:
        return [ord(c) for c in self.text]
