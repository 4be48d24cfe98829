"""Fully dynamic LZ77 maintainer.

Keeps a phrase tree (parent(i) = i + max(LPF(i), 1)) in sync with an edited
string and answers phrase queries from it.  Each edit triggers three
updaters over the affected index classes:

- near indices: everything within the length-m window left of the pivot is
  recomputed directly;
- first-occurrence indices: leftmost occurrences, right of the pivot, of
  every window that touches the pivot with arms up to m, in both the old and
  the new string;
- far indices with long matches: handled through occurrences of the m-length
  anchor windows adjacent to the pivot, processed cluster by cluster with
  per-string critical-index sequences merged into parent-clean interval
  moves.

m is recomputed per update as ceil(cube root of the current length).  During
a transition the engine queries both the pre-edit and post-edit strings, so
it keeps two synchronized index copies (the lagging one is brought up to
date at the end of the update).

Single-writer: one update or query at a time; the engine may move between
threads only when quiescent.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from .dynstr import EditKind, EditOp, EditReceipt
from .index_fast import FastIndex
from .index_naive import NaiveIndex
from .lpf import LpfQueries
from .lpftree import LpfTree, NaiveLpfTree
from .stats import IndexStats


@dataclass(frozen=True)
class Phrase:
    start: int
    end: int
    kind: str              # "fresh" or "copy"
    source: int | None = None

    @property
    def length(self) -> int:
        return self.end - self.start + 1


def cube_ceil(n: int) -> int:
    """Smallest m with m**3 >= n."""
    if n <= 1:
        return n
    m = round(n ** (1 / 3))
    while m ** 3 < n:
        m += 1
    while m > 1 and (m - 1) ** 3 >= n:
        m -= 1
    return m


class IndexClass(Enum):
    SUPER_LIGHT = "super_light"
    LIGHT = "light"
    L_HEAVY = "l_heavy"
    R_HEAVY = "r_heavy"
    INACTIVE = "inactive"


@dataclass
class UpdateContext:
    """Per-update transient: pivot, window parameter, and rank maps.

    cl_* are the last ranks at-or-before the edit point in each string
    version, r_* the first ranks after it; the anchor windows are
    [pivot-m..pivot-1] on the left and [r..r+m-1] on the right.  Window
    contents are identical in both versions at matching node identities.
    """
    kind: EditKind
    pivot: int
    m: int
    old_length: int
    new_length: int
    cl_cur: int
    cl_old: int
    r_cur: int
    r_old: int
    old_to_cur: Callable[[int], int | None]
    old_to_cur_ceil: Callable[[int], int]
    moved: "_MovedRanges" = field(repr=False, default=None)

    @property
    def left_window(self) -> tuple[int, int] | None:
        """New-string ranks of the left anchor window, or None if clipped."""
        lo, hi = self.pivot - self.m, self.pivot - 1
        return (lo, hi) if lo >= 1 else None

    @property
    def right_window(self) -> tuple[int, int] | None:
        lo, hi = self.r_cur, self.r_cur + self.m - 1
        return (lo, hi) if hi <= self.new_length else None


class _MovedRanges:
    """Disjoint sorted rank intervals already reparented in this transition."""

    def __init__(self):
        self._starts: list[int] = []
        self._ends: list[int] = []

    def add(self, a: int, b: int):
        starts, ends = self._starts, self._ends
        lo = bisect.bisect_left(starts, a)
        if lo > 0 and ends[lo - 1] >= a - 1:
            lo -= 1
        hi = lo
        while hi < len(starts) and starts[hi] <= b + 1:
            hi += 1
        if lo < hi:
            a = min(a, starts[lo])
            b = max(b, ends[hi - 1])
        starts[lo:hi] = [a]
        ends[lo:hi] = [b]

    def uncovered(self, a: int, b: int) -> list[tuple[int, int]]:
        starts, ends = self._starts, self._ends
        out = []
        k = bisect.bisect_left(starts, a)
        if k > 0 and ends[k - 1] >= a:
            a = ends[k - 1] + 1
        while a <= b:
            if k == len(starts) or starts[k] > b:
                out.append((a, b))
                break
            if starts[k] > a:
                out.append((a, starts[k] - 1))
            a = ends[k] + 1
            k += 1
        return out


class Engine:
    def __init__(self, symbols=(), backend: str = "fast", tree: str = "fast",
                 lmax: int | None = None, seed: int = 0,
                 debug_checks: bool = False, alphabet_bound: int | None = None,
                 stats: IndexStats | None = None):
        symbols = list(symbols)
        self.stats = stats if stats is not None else IndexStats()
        self.backend = backend
        self.debug_checks = debug_checks
        kw = dict(stats=self.stats, seed=seed, alphabet_bound=alphabet_bound,
                  debug_checks=debug_checks)
        if backend == "fast":
            self.cur = FastIndex(symbols, lmax=lmax, **kw)
            self.old = FastIndex(symbols, lmax=lmax, **kw)
        elif backend == "naive":
            self.cur = NaiveIndex(symbols, **kw)
            self.old = NaiveIndex(symbols, **kw)
        else:
            raise ValueError(f"unknown backend {backend!r}")
        self.lpf_cur = LpfQueries(self.cur)
        self.lpf_old = LpfQueries(self.old)
        self._dead_rank: dict = {}
        if tree == "fast":
            self.tree = LpfTree(self._rank_of, seed=seed)
        elif tree == "naive":
            self.tree = NaiveLpfTree(self._rank_of)
        else:
            raise ValueError(f"unknown tree implementation {tree!r}")
        self.stats.phase = "preprocess"
        self._build_tree()
        self.stats.phase = "idle"

    # -- plumbing -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.cur)

    def symbols(self) -> list[int]:
        return self.cur.symbols()

    def _rank_of(self, key):
        if key.alive:
            return self.cur.ds.rank(key)
        return self._dead_rank[key]

    def _node_at(self, rank: int):
        if rank == len(self.cur) + 1:
            return self.tree.root
        return self.cur.select(rank)

    def _rank_of_key(self, key) -> int:
        if key is self.tree.root:
            return len(self.cur) + 1
        return self.cur.ds.rank(key)

    def _build_tree(self):
        n = len(self.cur)
        nodes = [self.cur.select(i) for i in range(1, n + 1)]
        for node in nodes:
            self.tree.insert(node)
        for i in range(n, 0, -1):
            dest = self._node_at(i + self.lpf_cur.lpf(i))
            self.tree.link(nodes[i - 1], dest)

    def _reparent(self, rank: int, dest_rank: int, moved: _MovedRanges):
        node = self.cur.select(rank)
        dest = self._node_at(dest_rank)
        if self.tree.parent_of(node) is None:
            self.tree.link(node, dest)
        else:
            self.tree.move_interval(dest, node, node)
        moved.add(rank, rank)

    # -- update ---------------------------------------------------------------

    def update(self, op: EditOp) -> EditReceipt:
        receipt = self.cur.apply_edit(op)
        pivot = receipt.pivot
        kind, pos = op.kind, op.pos
        if kind is EditKind.INSERT:
            self._insert_pivot = pos
            self.tree.insert(pivot)
        elif kind is EditKind.DELETE:
            self._delete_pivot = pos
            self._dead_rank[pivot] = pos - 0.5
        try:
            n_new = len(self.cur)
            if n_new > 0:
                self._transition(kind, pos, n_new)
            if kind is EditKind.DELETE:
                self.stats.phase = "maintain"
                self.tree.delete(pivot)
        finally:
            self._dead_rank.clear()
            self.stats.phase = "maintain"
            self.old.apply_edit(op)
            self.stats.phase = "idle"
        if self.debug_checks and hasattr(self.tree, "check_consistency"):
            self.tree.check_consistency()
        return receipt

    def _make_context(self, kind: EditKind, pos: int, n_new: int) -> "UpdateContext":
        n_old = len(self.old)
        m = max(1, cube_ceil(n_new))
        if kind is EditKind.SUBSTITUTE:
            cl_cur, cl_old = pos, pos
            r_cur, r_old = pos + 1, pos + 1

            def old_to_cur(r, _pos=pos):
                return r

            old_to_cur_ceil = old_to_cur
        elif kind is EditKind.INSERT:
            cl_cur, cl_old = pos, pos - 1
            r_cur, r_old = pos + 1, pos

            def old_to_cur(r, _pos=pos):
                return r if r < _pos else r + 1

            old_to_cur_ceil = old_to_cur
        else:  # delete
            cl_cur, cl_old = pos - 1, pos
            r_cur, r_old = pos, pos + 1

            def old_to_cur(r, _pos=pos):
                if r < _pos:
                    return r
                return None if r == _pos else r - 1

            def old_to_cur_ceil(r, _pos=pos):
                return r if r < _pos else r - 1

        return UpdateContext(kind=kind, pivot=pos, m=m, old_length=n_old,
                             new_length=n_new, cl_cur=cl_cur, cl_old=cl_old,
                             r_cur=r_cur, r_old=r_old, old_to_cur=old_to_cur,
                             old_to_cur_ceil=old_to_cur_ceil,
                             moved=_MovedRanges())

    def _transition(self, kind: EditKind, pos: int, n_new: int):
        ctx = self._make_context(kind, pos, n_new)
        self.stats.phase = "superlight"
        self._update_super_light(ctx)
        self.stats.phase = "light"
        self._update_light(ctx)
        for label, direction in (("heavyL", "L"), ("heavyR", "R")):
            self.stats.phase = label
            self._update_heavy(ctx, direction)
        self.stats.phase = "maintain"

    def _update_super_light(self, ctx: "UpdateContext"):
        """Recompute every position in the pivot-adjacent window directly."""
        pos, m = ctx.pivot, ctx.m
        for i in range(max(1, pos - m - 1), min(ctx.new_length, pos) + 1):
            self._reparent(i, i + self.lpf_cur.lpf(i), ctx.moved)

    def _update_light(self, ctx: "UpdateContext"):
        """Reparent leftmost occurrences, right of the pivot, of every window
        touching the pivot with arms up to m, in both string versions."""
        m = ctx.m
        for side, cl, to_cur in (
            (self.old, ctx.cl_old, ctx.old_to_cur),
            (self.cur, ctx.cl_cur, lambda r: r),
        ):
            n_side = len(side)
            if cl < 1 or cl > n_side:
                continue
            max_b = min(m, n_side - cl)
            for a in range(0, min(m, cl - 1) + 1):
                b = 0
                while b <= max_b:
                    k = side.first_occ((cl - a, cl + b), (cl + 1, n_side))
                    if k is None:
                        break
                    kc = to_cur(k)
                    self._reparent(kc, kc + self.lpf_cur.lpf(kc), ctx.moved)
                    # k matches every window up to arm length lcp-a-1, and
                    # stays the leftmost occurrence while it matches
                    ell = side.lcp(k, cl - a)
                    b = ell - a

    def _run_end(self, side, cluster) -> int:
        a, p = cluster.a, cluster.p
        n_side = len(side)
        if a + p <= n_side:
            return a + p + side.lcp(a, a + p) - 1
        return a + (n_side - a)  # run cannot extend past the end

    def _update_heavy(self, ctx: "UpdateContext", direction: str):
        """Repair far positions whose long matches cross the pivot, through
        occurrence clusters of the anchor window on the given side."""
        m = ctx.m
        moved = ctx.moved
        old_to_cur = ctx.old_to_cur
        old_to_cur_ceil = ctx.old_to_cur_ceil
        if direction == "L":
            w_cur = w_old = (ctx.pivot - m, ctx.pivot - 1)
        else:
            w_cur = (ctx.r_cur, ctx.r_cur + m - 1)
            w_old = (ctx.r_old, ctx.r_old + m - 1)
        if w_cur[0] < 1 or w_cur[1] > ctx.new_length:
            return
        if w_old[0] < 1 or w_old[1] > ctx.old_length:
            return
        cur, old = self.cur, self.old
        n_new, n_old = len(cur), len(old)
        c_old = old.clusters(w_old, (1, n_old))
        c_cur = cur.clusters(w_cur, (1, n_new))
        anchors: list[tuple[str, int, int]] = []
        for tag, side, cls in (("old", old, c_old), ("cur", cur, c_cur)):
            for c in cls:
                anchors.append((tag, c.a, c.a + m - 1))
                if c.a + c.p <= c.b:
                    anchors.append((tag, c.a + c.p, c.a + c.p + m - 1))
                anchors.append((tag, c.b, self._run_end(side, c)))
        seen = set()
        for tag, i, j in anchors:
            key = (tag, i, j)
            if key in seen:
                continue
            seen.add(key)
            if tag == "cur":
                i_cur, j_cur = i, j
                i_old = self._cur_to_old(i)
                if i_old is None:
                    continue
                j_old = min(max(self._cur_to_old_floor(j), i_old + m - 1), n_old)
            else:
                i_old, j_old = i, j
                i_cur = old_to_cur(i)
                if i_cur is None:
                    continue
                j_cur = min(max(old_to_cur_ceil(j), i_cur + m - 1), n_new)
            if i_cur + m - 1 > n_new or i_old + m - 1 > n_old:
                continue
            # the anchor must be an occurrence of the window in both strings
            if old.lcp(i_old, w_old[0]) < m or cur.lcp(i_cur, w_cur[0]) < m:
                continue
            seq_cur = self._critical_seq(self.lpf_cur, i_cur, j_cur)
            seq_old = self._critical_seq(self.lpf_old, i_old, j_old)
            mapped_old = [old_to_cur_ceil(x) for x in seq_old]
            q = max(min(mapped_old), min(seq_cur))
            bps = sorted({x for x in seq_cur + mapped_old if q <= x <= i_cur}
                         | {q})
            for t, a in enumerate(bps):
                b = bps[t + 1] - 1 if t + 1 < len(bps) else i_cur
                if b < a:
                    continue
                dest = a + self.lpf_cur.lpf(a)
                for ca, cb in moved.uncovered(a, b):
                    self._move_chunk(dest, ca, cb)
                    moved.add(ca, cb)

    def _move_chunk(self, dest_rank: int, ca: int, cb: int):
        if self.debug_checks:
            parents = {id(self.tree.parent_of(self.cur.select(r)))
                       for r in range(ca, cb + 1)}
            assert len(parents) == 1, f"chunk [{ca}..{cb}] spans parents"
        dest = self._node_at(dest_rank)
        self.tree.move_interval(dest, self.cur.select(ca), self.cur.select(cb))

    def _cur_to_old(self, r: int):
        # inverse of old_to_cur for the edit in flight
        n_new, n_old = len(self.cur), len(self.old)
        if n_new == n_old:
            return r
        if n_new > n_old:  # insertion at some pivot rank
            pivot = self._insert_pivot
            if r < pivot:
                return r
            return None if r == pivot else r - 1
        pivot = self._delete_pivot
        return r if r < pivot else r + 1

    def _cur_to_old_floor(self, r: int):
        n_new, n_old = len(self.cur), len(self.old)
        if n_new == n_old:
            return r
        if n_new > n_old:
            pivot = self._insert_pivot
            return r if r < pivot else r - 1
        pivot = self._delete_pivot
        return r if r < pivot else r + 1

    def _critical_seq(self, lpfq: LpfQueries, i: int, j: int) -> list[int]:
        def f(h):
            return h + lpfq.lpf(h)

        if f(i) <= j:
            return [i]
        lo, hi = 1, i
        while lo < hi:
            mid = (lo + hi) // 2
            if f(mid) > j:
                hi = mid
            else:
                lo = mid + 1
        ell_min = lo
        seq = [i]
        x = f(i)
        cur_hi = i
        while True:
            lo2, hi2 = ell_min, cur_hi
            while lo2 < hi2:
                mid = (lo2 + hi2) // 2
                if f(mid) >= x:
                    hi2 = mid
                else:
                    lo2 = mid + 1
            if lo2 != seq[-1]:
                seq.append(lo2)
            if lo2 == ell_min:
                break
            cur_hi = lo2 - 1
            x = f(cur_hi)
        return seq

    def critical_sequence(self, i: int, j: int) -> list[int]:
        """Critical-index list over the current string (quiescent queries)."""
        if not (1 <= i <= j):
            raise ValueError(f"need 1 <= i <= j, got ({i}, {j})")
        return self._critical_seq(self.lpf_cur, i, j)

    # -- queries ----------------------------------------------------------------

    def lz_size(self) -> int:
        n = len(self.cur)
        if n == 0:
            return 0
        return self.tree.get_depth(self.cur.select(1))

    def lz_length(self, i: int) -> int:
        n = len(self.cur)
        if not (0 <= i <= n):
            raise IndexError(f"lz_length index {i} out of 0..{n}")
        if i == 0:
            return 0
        node1 = self.cur.select(1)
        total = self.tree.get_depth(node1)
        lo, hi = 1, total
        while lo < hi:
            mid = (lo + hi) // 2
            end = self._rank_of_key(self.tree.level_ancestor(node1, mid)) - 1
            if end >= i:
                hi = mid
            else:
                lo = mid + 1
        return lo

    def select_phrase(self, t: int) -> Phrase:
        n = len(self.cur)
        if n == 0:
            raise IndexError("empty string has no phrases")
        node1 = self.cur.select(1)
        total = self.tree.get_depth(node1)
        if not (1 <= t <= total):
            raise IndexError(f"phrase index {t} out of 1..{total}")
        start = self._rank_of_key(self.tree.level_ancestor(node1, t - 1))
        end = self._rank_of_key(self.tree.level_ancestor(node1, t)) - 1
        if end > start:
            return Phrase(start, end, "copy")
        if start > 1 and self.cur.exists((start, start), (1, start - 1)):
            return Phrase(start, end, "copy")
        return Phrase(start, end, "fresh")

    def containing_phrase(self, i: int) -> Phrase:
        self.cur._check_pos(i)
        return self.select_phrase(self.lz_length(i))

    def recompute_factorization(self) -> list[Phrase]:
        out: list[Phrase] = []
        n = len(self.cur)
        p = 1
        while p <= n:
            raw = self.lpf_cur.lpf_raw(p)
            if raw == 0:
                out.append(Phrase(p, p, "fresh"))
                p += 1
            else:
                out.append(Phrase(p, p + raw - 1, "copy", self.lpf_cur.lpfpos(p)))
                p += raw
        return out

    # -- inspection ---------------------------------------------------------------

    def parent_ranks(self) -> list[int]:
        """parent rank per position, 1-based list; parent of the last jump
        chain member is n+1."""
        n = len(self.cur)
        out = [0] * (n + 1)
        for i in range(1, n + 1):
            out[i] = self._rank_of_key(self.tree.parent_of(self.cur.select(i)))
        return out

    def stats_snapshot(self) -> dict:
        return self.stats.snapshot()
