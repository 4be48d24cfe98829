"""Fast backend: double Karp-Rabin fingerprints plus interval-partitioned
suffix arrays.

lcp/lcs/ipm/clusters answer through position-normalized polynomial hashes
under two prime moduli (probabilistic, seed-configurable); exists/first_occ/
last_occ answer deterministically through a multi-level interval partition:
each level i splits [1..n] into intervals of length < 2^(i+1) with adjacent
lengths summing to >= 2^i, every stored interval keeps a content snapshot
and its suffix array, a query range is covered greedily by stored intervals
(highest level first), each covered piece is searched by suffix-array binary
search, and occurrences straddling piece boundaries are patched with short
window scans around each boundary.

An edit rebuilds the hash arrays (vectorized over the whole mirror) and the
one touched interval per level, splitting or merging intervals exactly at
the length thresholds.  Query work scales with span/2^lmax, update work with
2^lmax.
"""

from __future__ import annotations

import numpy as np

from .index_common import BaseIndex, Cluster, group_into_clusters, min_period

_MOD1 = 2147483647
_MOD2 = 2147483629
_MIN_LEVEL = 6          # intervals below 64 chars are scanned directly
_SCAN_CUTOFF = 256      # ranges at most this long are scanned directly


def _sym_array(text: str) -> np.ndarray:
    if not text:
        return np.zeros(0, dtype=np.uint64)
    buf = np.frombuffer(text.encode("utf-32-le"), dtype=np.uint32)
    return buf.astype(np.uint64) + 1  # avoid the all-zero symbol

def _mod_inv(a: int, m: int) -> int:
    return pow(a, m - 2, m)


class _Hashes:
    """Position-normalized substring hashes for one symbol array."""

    def __init__(self, seed: int):
        rng = np.random.default_rng(seed)
        self.bases = [int(rng.integers(1 << 16, _MOD1 - 2)),
                      int(rng.integers(1 << 16, _MOD2 - 2))]
        self.mods = [_MOD1, _MOD2]
        self._cap = 0
        self._pow: list[np.ndarray] = [None, None]
        self._inv: list[np.ndarray] = [None, None]
        self._pow_l: list[list[int]] = [[], []]
        self.pref: list[list[int]] = [[], []]
        self.pref_np: list[np.ndarray] = [None, None]

    def _grow(self, n: int):
        if n + 1 <= self._cap:
            return
        cap = max(n + 1, 2 * self._cap, 1024)
        exps = np.arange(cap, dtype=np.uint64)
        for k in range(2):
            b, m = self.bases[k], self.mods[k]
            self._pow[k] = self._powmod(b, exps, m)
            self._inv[k] = self._powmod(_mod_inv(b, m), exps, m)
            self._pow_l[k] = self._pow[k].tolist()
        self._cap = cap

    @staticmethod
    def _powmod(base: int, exps: np.ndarray, m: int) -> np.ndarray:
        vals = np.ones(len(exps), dtype=np.uint64)
        bits = exps.copy()
        bb = base % m
        while bits.any():
            odd = (bits & 1).astype(bool)
            vals[odd] = vals[odd] * bb % m
            bits >>= 1
            bb = bb * bb % m
        return vals

    def rebuild(self, sym: np.ndarray):
        n = len(sym)
        self._grow(n)
        for k in range(2):
            m = self.mods[k]
            t = sym * self._inv[k][:n] % m
            c = np.zeros(n + 1, dtype=np.uint64)
            np.cumsum(t, out=c[1:])
            c %= m
            self.pref_np[k] = c
            self.pref[k] = c.tolist()

    def piece(self, a0: int, length: int) -> tuple[int, int]:
        """Hash pair of the substring at 0-based offset a0 of given length."""
        out = []
        for k in range(2):
            c = self.pref[k]
            m = self.mods[k]
            out.append((c[a0 + length] - c[a0]) * self._pow_l[k][a0] % m)
        return out[0], out[1]

    def equal(self, a0: int, b0: int, length: int) -> bool:
        for k in range(2):
            c = self.pref[k]
            m = self.mods[k]
            if (c[a0 + length] - c[a0]) * self._pow_l[k][a0] % m != \
               (c[b0 + length] - c[b0]) * self._pow_l[k][b0] % m:
                return False
        return True

    def window_matches(self, lo0: int, hi0: int, plen: int,
                       target: tuple[int, int]) -> np.ndarray:
        """0-based offsets t in [lo0..hi0] where hash(t, plen) == target."""
        idx = np.arange(lo0, hi0 + 1, dtype=np.int64)
        ok = None
        for k in range(2):
            c = self.pref_np[k]
            m = self.mods[k]
            # values are < m < 2^31: add m before subtracting to stay in
            # uint64 range, then one product below 2^62
            h = (c[idx + plen] + m - c[idx]) % m * self._pow[k][lo0:hi0 + 1] % m
            good = h == target[k]
            ok = good if ok is None else (ok & good)
        return idx[ok]


class _Level:
    __slots__ = ("bits", "starts", "snaps", "sas", "stored")

    def __init__(self, bits: int, n: int, text: str, stored: bool):
        self.bits = bits
        self.stored = stored
        step = 1 << bits
        if n == 0:
            self.starts = np.zeros(0, dtype=np.int64)
        else:
            self.starts = np.arange(1, n + 1, step, dtype=np.int64)
        self.snaps: list[str] = []
        self.sas: list[np.ndarray] = []
        if stored:
            ends = [int(s) - 1 for s in self.starts[1:]] + ([n] if n else [])
            for s, e in zip(self.starts.tolist(), ends):
                snap = text[s - 1:e]
                self.snaps.append(snap)
                self.sas.append(_suffix_array(snap))


def _suffix_array(snap: str) -> np.ndarray:
    order = sorted(range(len(snap)), key=lambda o: snap[o:])
    return np.asarray(order, dtype=np.int64)


class FastIndex(BaseIndex):
    backend = "fast"

    def __init__(self, symbols=(), lmax: int | None = None, **kw):
        super().__init__(symbols, **kw)
        n = len(self.text)
        if lmax is None:
            lmax = max(_MIN_LEVEL, (max(n, 4).bit_length() + 1) // 2)
        self.lmax = max(_MIN_LEVEL, lmax)
        seed = kw.get("seed", 0)
        self._fwd = _Hashes(seed * 2 + 12345)
        self._rev = _Hashes(seed * 2 + 54321)
        self._levels = [
            _Level(b, n, self.text, stored=b >= _MIN_LEVEL)
            for b in range(_MIN_LEVEL, self.lmax + 1)
        ]
        self._rehash()

    def _rehash(self):
        sym = _sym_array(self.text)
        self._fwd.rebuild(sym)
        self._rev.rebuild(sym[::-1])

    # -- partition maintenance ------------------------------------------------

    def _after_edit(self, op, receipt):
        self._rehash()
        n = len(self.text)
        pos = op.pos
        delta = {"I": 1, "D": -1, "S": 0}[op.kind.value]
        for lev in self._levels:
            self._edit_level(lev, pos, delta, n)
        if self.debug_checks:
            self.check_partition()

    def _edit_level(self, lev: _Level, pos: int, delta: int, n: int):
        starts = lev.starts
        if len(starts) == 0:
            lev.starts = np.asarray([1] if n else [], dtype=np.int64)
            if lev.stored and n:
                snap = self.text
                lev.snaps = [snap]
                lev.sas = [_suffix_array(snap)]
            return
        if n == 0:
            lev.starts = np.zeros(0, dtype=np.int64)
            lev.snaps, lev.sas = [], []
            return
        j = int(np.searchsorted(starts, pos, side="right")) - 1
        if j < 0:
            j = 0
        if j >= len(starts):
            j = len(starts) - 1
        if delta:
            starts[j + 1:] += delta
        start_j = int(starts[j])
        end_j = (int(starts[j + 1]) - 1) if j + 1 < len(starts) else n
        length = end_j - start_j + 1
        cap = 1 << (lev.bits + 1)
        if length >= cap:
            mid = start_j + (1 << lev.bits)
            lev.starts = np.insert(starts, j + 1, mid)
            if lev.stored:
                lev.snaps[j:j + 1] = ["", ""]
                lev.sas[j:j + 1] = [None, None]
                self._rebuild_interval(lev, j, n)
                self._rebuild_interval(lev, j + 1, n)
            return
        if length == 0:
            # a deletion emptied the interval: drop it
            lev.starts = np.delete(starts, j)
            if lev.stored:
                del lev.snaps[j]
                del lev.sas[j]
            starts = lev.starts
            if len(starts) == 0:
                return
            j = min(j, len(starts) - 1)
        # merge with a neighbor when the combined length hits 2^bits - 1
        merged = True
        while merged and len(lev.starts) > 1:
            merged = False
            starts = lev.starts
            for jj in (j - 1, j):
                if 0 <= jj < len(starts) - 1:
                    s1 = int(starts[jj])
                    e2 = (int(starts[jj + 2]) - 1) if jj + 2 < len(starts) else n
                    if e2 - s1 + 1 == (1 << lev.bits) - 1:
                        lev.starts = np.delete(starts, jj + 1)
                        if lev.stored:
                            del lev.snaps[jj + 1]
                            del lev.sas[jj + 1]
                            self._rebuild_interval(lev, jj, n)
                        j = jj
                        merged = True
                        break
        if lev.stored:
            j = min(j, len(lev.starts) - 1)
            self._rebuild_interval(lev, j, n)

    def _rebuild_interval(self, lev: _Level, j: int, n: int):
        start = int(lev.starts[j])
        end = (int(lev.starts[j + 1]) - 1) if j + 1 < len(lev.starts) else n
        snap = self.text[start - 1:end]
        lev.snaps[j] = snap
        lev.sas[j] = _suffix_array(snap)

    def check_partition(self):
        n = len(self.text)
        for lev in self._levels:
            starts = lev.starts.tolist()
            if not starts:
                assert n == 0
                continue
            assert starts[0] == 1
            lens = [starts[k + 1] - starts[k] for k in range(len(starts) - 1)]
            lens.append(n - starts[-1] + 1)
            cap = 1 << (lev.bits + 1)
            assert all(0 < L < cap for L in lens), (lev.bits, lens)
            for k in range(len(lens) - 1):
                assert lens[k] + lens[k + 1] >= (1 << lev.bits)
            if lev.stored:
                for k, s in enumerate(starts):
                    e = starts[k + 1] - 1 if k + 1 < len(starts) else n
                    assert lev.snaps[k] == self.text[s - 1:e]

    # -- cover ------------------------------------------------------------------

    def _cover(self, a: int, b: int) -> list[tuple[str, int, int, object]]:
        """Segments tiling [a..b]: ("sa", start, end, (lev, j)) for stored
        intervals, ("scan", start, end, None) for directly scanned pieces."""
        segs = []
        pos = a
        while pos <= b:
            chosen = None
            for lev in reversed(self._levels):
                starts = lev.starts
                if len(starts) == 0:
                    continue
                j = int(np.searchsorted(starts, pos, side="right")) - 1
                if j < 0:
                    continue
                s = int(starts[j])
                e = (int(starts[j + 1]) - 1) if j + 1 < len(starts) else len(self.text)
                if s >= a and e <= b:
                    chosen = (lev, j, s, e)
                    break
            if chosen is None:
                # ragged edge: scan to the end of the lowest-level interval
                lev = self._levels[0] if self._levels else None
                if lev is None or len(lev.starts) == 0:
                    segs.append(("scan", pos, b, None))
                    break
                starts = lev.starts
                j = int(np.searchsorted(starts, pos, side="right")) - 1
                e = (int(starts[j + 1]) - 1) if 0 <= j + 1 < len(starts) else len(self.text)
                end = min(b, e)
                segs.append(("scan", pos, end, None))
                pos = end + 1
            else:
                lev, j, s, e = chosen
                segs.append(("sa", max(pos, s), e, (lev, j, s)))
                pos = e + 1
        # merge adjacent scan segments
        out = []
        for seg in segs:
            if out and seg[0] == "scan" and out[-1][0] == "scan" \
                    and out[-1][2] + 1 == seg[1]:
                out[-1] = ("scan", out[-1][1], seg[2], None)
            else:
                out.append(list(seg))
        return [tuple(s) for s in out]

    # -- suffix-array piece search ------------------------------------------

    def _sa_range(self, lev: _Level, j: int, p: str) -> tuple[int, int, np.ndarray]:
        snap, sa = lev.snaps[j], lev.sas[j]
        plen = len(p)
        lo, hi = 0, len(sa)
        while lo < hi:
            mid = (lo + hi) // 2
            o = int(sa[mid])
            if snap[o:o + plen] < p:
                lo = mid + 1
            else:
                hi = mid
        first = lo
        hi = len(sa)
        while lo < hi:
            mid = (lo + hi) // 2
            o = int(sa[mid])
            if snap[o:o + plen] <= p:
                lo = mid + 1
            else:
                hi = mid
        return first, lo, sa

    # -- query implementations ------------------------------------------------

    def _lcp(self, i: int, j: int) -> int:
        if i == j:
            return len(self.text) - i + 1
        n = len(self.text)
        i0, j0 = i - 1, j - 1
        limit = n - max(i0, j0)
        lo, hi = 0, limit
        eq = self._fwd.equal
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if eq(i0, j0, mid):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def _lcs(self, i: int, j: int) -> int:
        if i == j:
            return i
        n = len(self.text)
        ri, rj = n - i, n - j
        limit = min(i, j)
        lo, hi = 0, limit
        eq = self._rev.equal
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if eq(ri, rj, mid):
                lo = mid
            else:
                hi = mid - 1
        return lo

    def _find_in(self, p: str, a: int, b: int) -> int:
        """Leftmost occurrence rank of p inside [a..b], or -1 (direct scan)."""
        k = self.text.find(p, a - 1, b)
        return k + 1 if k != -1 else 0

    def _exists(self, pat, text) -> bool:
        a, b = text
        p = self.text[pat[0] - 1:pat[1]]
        plen = len(p)
        if b - a + 1 <= max(_SCAN_CUTOFF, 4 * plen):
            return self.text.find(p, a - 1, b) != -1
        segs = self._cover(a, b)
        prev_end = None
        for kind, s, e, ref in segs:
            if prev_end is not None:
                wl = max(a, prev_end - plen + 2)
                wr = min(b, prev_end + plen - 1)
                if wr - wl + 1 >= plen and self.text.find(p, wl - 1, wr) != -1:
                    return True
            prev_end = e
            if e - s + 1 < plen:
                continue
            if kind == "scan":
                if self.text.find(p, s - 1, e) != -1:
                    return True
            else:
                lev, j, istart = ref
                lo, hi, sa = self._sa_range(lev, j, p)
                if lo < hi:
                    # occurrence must start within [s..e] (cover may overlap)
                    if s == istart:
                        return True
                    off = np.asarray(sa[lo:hi])
                    if bool(((off + istart >= s) &
                             (off + istart + plen - 1 <= e)).any()):
                        return True
        return False

    def _first_occ(self, pat, text):
        return self._edge_occ(pat, text, first=True)

    def _last_occ(self, pat, text):
        return self._edge_occ(pat, text, first=False)

    def _edge_occ(self, pat, text, first: bool):
        a, b = text
        p = self.text[pat[0] - 1:pat[1]]
        plen = len(p)
        if b - a + 1 <= max(_SCAN_CUTOFF, 4 * plen):
            if first:
                k = self.text.find(p, a - 1, b)
            else:
                k = self.text.rfind(p, a - 1, b)
            return k + 1 if k != -1 else None
        segs = self._cover(a, b)
        regions: list[tuple[int, tuple]] = []
        prev_end = None
        for kind, s, e, ref in segs:
            if prev_end is not None:
                wl = max(a, prev_end - plen + 2)
                wr = min(b, prev_end + plen - 1)
                if wr - wl + 1 >= plen:
                    regions.append((wl, ("scan", wl, wr, None)))
            prev_end = e
            if e - s + 1 >= plen:
                regions.append((s, (kind, s, e, ref)))
        regions.sort(key=lambda r: r[0], reverse=not first)
        best = None
        for key, (kind, s, e, ref) in regions:
            if best is not None:
                if first and best <= key:
                    break
                if not first and best >= key + (e - s):
                    break
            cand = None
            if kind == "scan":
                k = self.text.find(p, s - 1, e) if first \
                    else self.text.rfind(p, s - 1, e)
                cand = k + 1 if k != -1 else None
            else:
                lev, j, istart = ref
                lo, hi, sa = self._sa_range(lev, j, p)
                if lo < hi:
                    off = np.asarray(sa[lo:hi]) + istart
                    if s != istart or e != istart + len(lev.snaps[j]) - 1:
                        off = off[(off >= s) & (off + plen - 1 <= e)]
                    if len(off):
                        cand = int(off.min()) if first else int(off.max())
            if cand is not None and (best is None or
                                     (cand < best if first else cand > best)):
                best = cand
        return best

    def _ipm(self, pat, text):
        a, b = text
        plen = pat[1] - pat[0] + 1
        hi0 = b - plen
        if hi0 < a - 1:
            return []
        target = self._fwd.piece(pat[0] - 1, plen)
        hits = self._fwd.window_matches(a - 1, hi0, plen, target)
        if len(hits) == 0:
            return []
        occ = (hits + 1).tolist()
        per = min_period(self.text[pat[0] - 1:pat[1]])
        rel = [k - a + 1 for k in occ]
        return [(c.a, c.b, c.p) for c in group_into_clusters(rel, per)]

    def _clusters(self, pat, text) -> list[Cluster]:
        a, b = text
        plen = pat[1] - pat[0] + 1
        hi0 = b - plen
        if hi0 < a - 1:
            return []
        target = self._fwd.piece(pat[0] - 1, plen)
        hits = self._fwd.window_matches(a - 1, hi0, plen, target)
        if len(hits) == 0:
            return []
        per = min_period(self.text[pat[0] - 1:pat[1]])
        return group_into_clusters((hits + 1).tolist(), per)
