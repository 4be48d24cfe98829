"""Brute-force reference implementations used by tests and verification modes.

Everything here works on plain symbol sequences by direct character
comparison (no hashing) and is quadratic-or-worse; callers keep n small.
Strings are passed as lists of integer codes; internally they are mirrored
into Python str (one char per code) so scans run at C speed while staying
exact comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import Phrase


def to_text(symbols) -> str:
    return "".join(map(chr, symbols))


def occurrences(text: str, pat: str, lo: int = 0, hi: int | None = None) -> list[int]:
    """All 0-based occurrence starts of pat inside text[lo:hi]."""
    if hi is None:
        hi = len(text)
    out = []
    k = text.find(pat, lo, hi)
    while k != -1:
        out.append(k)
        k = text.find(pat, k + 1, hi)
    return out


def _longest_previous(text: str, p: int, lower: int = 0) -> int:
    """max ell such that text[p:p+ell] occurs starting before p (overlap ok)."""
    n = len(text)
    limit = n - p
    if limit == 0:
        return 0
    lower = min(lower, limit)
    lo = 0
    if lower > 0 and text.find(text[p:p + lower], 0, p + lower - 1) != -1:
        lo = lower
    if lo == 0:
        if text.find(text[p], 0, p) == -1:
            return 0
        lo = 1
    hi = None
    while lo < limit:
        cand = min(limit, lo * 2)
        if text.find(text[p:p + cand], 0, p + cand - 1) != -1:
            lo = cand
        else:
            hi = cand
            break
    if hi is None:
        return lo
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if text.find(text[p:p + mid], 0, p + mid - 1) != -1:
            lo = mid
        else:
            hi = mid
    return lo


def lz77_brute(symbols) -> list[Phrase]:
    """Greedy factorization: fresh character, or longest earlier factor."""
    text = to_text(symbols)
    n = len(text)
    phrases: list[Phrase] = []
    p = 0
    while p < n:
        ell = _longest_previous(text, p)
        if ell == 0:
            phrases.append(Phrase(p + 1, p + 1, "fresh"))
            p += 1
        else:
            src = text.rfind(text[p:p + ell], 0, p + ell - 1)
            phrases.append(Phrase(p + 1, p + ell, "copy", src + 1))
            p += ell
    return phrases


def lpf_array_brute(symbols) -> list[int]:
    """Unclamped LPF values, 1-based list (index 0 unused).

    Uses the left-to-right scan with the LPF(i+1) >= LPF(i)-1 lower bound;
    every probe is a direct substring search.
    """
    text = to_text(symbols)
    n = len(text)
    lpf = [0] * (n + 1)
    prev = 0
    for p in range(n):
        prev = _longest_previous(text, p, lower=max(0, prev - 1))
        lpf[p + 1] = prev
    return lpf


def lpf_table_brute(symbols) -> tuple[list[int], list[int | None]]:
    """Quadratic LPF and rightmost-witness tables, 1-based lists."""
    a = np.asarray(symbols, dtype=np.int64)
    n = len(a)
    lpf = np.zeros(n, dtype=np.int64)
    pos = np.full(n, -1, dtype=np.int64)
    idx = np.arange(n)
    for d in range(1, n):
        m = a[d:] == a[:-d]
        k = len(m)
        p = np.arange(k)
        nz = np.where(~m, p, k)[::-1]
        nextzero = np.minimum.accumulate(nz)[::-1]
        run = nextzero - p
        upd = run > lpf[d:]
        # iterating d upward means the first maximizer seen has the largest j
        lpf_v = lpf[d:]
        pos_v = pos[d:]
        lpf_v[upd] = run[upd]
        pos_v[upd] = idx[:k][upd]
    lpf_list = [0] + lpf.tolist()
    pos_list: list[int | None] = [None] + [int(j) + 1 if j >= 0 else None
                                           for j in pos.tolist()]
    return lpf_list, pos_list


def parent_array_from_lpf(lpf: list[int]) -> list[int]:
    """parent[i] = i + max(lpf[i], 1); 1-based, parent of n is n+1 or beyond."""
    n = len(lpf) - 1
    return [0] + [i + max(lpf[i], 1) for i in range(1, n + 1)]


def lpf_tree_brute(symbols) -> list[int]:
    return parent_array_from_lpf(lpf_array_brute(symbols))


def depth_of_one(parent: list[int]) -> int:
    """Edge count from position 1 to the virtual root n+1 (0 for empty)."""
    n = len(parent) - 1
    if n == 0:
        return 0
    d = 0
    i = 1
    while i <= n:
        i = parent[i]
        d += 1
    return d


def critical_sequence_brute(lpf: list[int], i: int, j: int) -> list[int]:
    """Decreasing list: i, then every x<=i where x+max(lpf,1) exceeds both j
    and its left neighbor's value."""
    f = [0] + [x + max(lpf[x], 1) for x in range(1, len(lpf))]
    seq = [i]
    for x in range(i, 0, -1):
        if f[x] <= j:
            break
        if x != i and (x == 1 or f[x] > f[x - 1]):
            seq.append(x)
    return seq


def lcp_matrix(symbols) -> np.ndarray:
    """M[i][j] = lcp of suffixes i and j, 0-based, shape (n+1, n+1)."""
    a = np.asarray(symbols, dtype=np.int64)
    n = len(a)
    m = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        eq = a[i] == a[i:]
        m[i, i:n] = np.where(eq, m[i + 1, i + 1:n + 2] + 1, 0)
        m[i:n, i] = m[i, i:n]
    return m


def pareto_front_size(points) -> int:
    """Number of non-dominated points (set semantics)."""
    uniq = sorted(set(points), key=lambda p: (-p[0], -p[1]))
    best_y = -1
    count = 0
    k = 0
    while k < len(uniq):
        x = uniq[k][0]
        top_y = uniq[k][1]
        if top_y > best_y:
            count += 1
            best_y = top_y
        while k < len(uniq) and uniq[k][0] == x:
            k += 1
    return count


@dataclass(frozen=True)
class ExtensionPoint:
    left: int   # longest common suffix of the two prefixes
    right: int  # longest common prefix of the two suffixes


def extension_points(symbols, anchor: int, earlier) -> list[ExtensionPoint]:
    lcp = lcp_matrix(symbols)
    rev = lcp_matrix(list(reversed(symbols)))
    n = len(symbols)
    out = []
    for j in earlier:
        right = int(lcp[anchor - 1][j - 1])
        left = int(rev[n - anchor][n - j])
        out.append(ExtensionPoint(left, right))
    return out


def nd_extension_sum(symbols, index_set) -> int:
    """Sum over i in I of the Pareto-front size of (lcs, lcp) pairs to
    earlier members of I."""
    if len(index_set) <= 1:
        return 0
    lcp = lcp_matrix(symbols)
    rev = lcp_matrix(list(reversed(symbols)))
    n = len(symbols)
    idx = sorted(index_set)
    total = 0
    for k, i in enumerate(idx):
        pts = [(int(rev[n - i][n - j]), int(lcp[i - 1][j - 1])) for j in idx[:k]]
        if pts:
            total += pareto_front_size(pts)
    return total


def classify_substitution_index(old_syms, new_syms, z: int, m: int,
                                i: int) -> set:
    """Diagnostic classifier for one position across a substitution at z.

    Returns the set of classes covering i (or {INACTIVE}); tests use it to
    confirm that every position whose jump target changes falls into at
    least one class handled by an updater.
    """
    from .engine import IndexClass
    s, sp = to_text(old_syms), to_text(new_syms)
    n = len(s)
    lpf_s = lpf_array_brute(old_syms)
    lpf_sp = lpf_array_brute(new_syms)
    a_val = max(lpf_s[i], 1)
    b_val = max(lpf_sp[i], 1)
    if a_val == b_val:
        return {IndexClass.INACTIVE}
    out = set()
    if z - m <= i <= z:
        out.add(IndexClass.SUPER_LIGHT)
    for text in (s, sp):
        if IndexClass.LIGHT in out:
            break
        for a in range(0, min(m, z - 1) + 1):
            for b in range(0, min(m, n - z) + 1):
                pat = text[z - a - 1:z + b]
                if text.find(pat, z) == i - 1:
                    out.add(IndexClass.LIGHT)
                    break
            if IndexClass.LIGHT in out:
                break
    span = min(a_val, b_val) - m
    for label, lo, hi in ((IndexClass.L_HEAVY, z - m, z - 1),
                          (IndexClass.R_HEAVY, z + 1, z + m)):
        if lo < 1 or hi > n:
            continue
        w = s[lo - 1:hi]
        shared = set(occurrences(s, w)) & set(occurrences(sp, w))
        if any(i - 1 <= k <= i - 1 + span for k in shared):
            out.add(label)
    return out or {IndexClass.INACTIVE}


def critical_vs_nd_check(symbols, i: int, j: int) -> bool:
    """|L(i,j)| <= |ND extensions of i over the occurrence set of s[i..j]| + 1."""
    text = to_text(symbols)
    pat = text[i - 1:j]
    occ = [k + 1 for k in occurrences(text, pat)]
    lpf = lpf_array_brute(symbols)
    seq = critical_sequence_brute(lpf, i, j)
    earlier = [o for o in occ if o < i]
    nd = pareto_front_size(
        [(p.left, p.right) for p in extension_points(symbols, i, earlier)]
    ) if earlier else 0
    return len(seq) <= nd + 1
