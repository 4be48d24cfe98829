"""Orthogonal-vectors gadget strings and the phrase-count reduction driver.

Encodes two sets A, B of d-dimensional boolean vectors into strings whose
LZ77 phrase counts decide orthogonality: with vector count n a perfect
square, the maintained string is dictionary + query-vector block + matrix
block, and the number of phrases covering the i-th matrix row is d+1 plus
the boolean inner product of the query vector with row i.  Switching the
query vector from all-ones to u and back costs one substitution per zero
coordinate of u.

Alphabet layout: letter families zero/one/two get codes family*(d+2)+j for
coordinate j; separator codes count up from 3*(d+2), each used at most once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class OVInstance:
    a: tuple[tuple[int, ...], ...]
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.a)
        if n != len(self.b) or n == 0:
            raise ValueError("need equal-sized nonempty vector sets")
        r = math.isqrt(n)
        if r * r != n:
            raise ValueError(f"vector count {n} is not a perfect square")
        d = len(self.a[0])
        for v in self.a + self.b:
            if len(v) != d or any(x not in (0, 1) for x in v):
                raise ValueError("vectors must be boolean and equal-length")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def d(self) -> int:
        return len(self.a[0])

    @property
    def root(self) -> int:
        return math.isqrt(len(self.a))


def brute_orthogonal_pairs(inst: OVInstance) -> list[tuple[int, int]]:
    out = []
    for i, v in enumerate(inst.a):
        for k, u in enumerate(inst.b):
            if not any(x and y for x, y in zip(v, u)):
                out.append((i, k))
    return out


@dataclass
class GadgetString:
    symbols: list[int] = field(default_factory=list)
    legend: dict[str, object] = field(default_factory=dict)

    def __len__(self):
        return len(self.symbols)


class _Alphabet:
    def __init__(self, d: int):
        self.d = d
        self._next_sep = 3 * (d + 2)

    def zero(self, j: int) -> int:
        return j

    def one(self, j: int) -> int:
        return (self.d + 2) + j

    def two(self, j: int) -> int:
        return 2 * (self.d + 2) + j

    def sep(self) -> int:
        code = self._next_sep
        self._next_sep += 1
        return code

    def letter(self, bit: int, j: int) -> int:
        return self.one(j) if bit else self.zero(j)


def a_coordinate(alpha: _Alphabet, root: int, i: int, j: int, bit: int) -> list[int]:
    """Row-coordinate block: letter^(3r+i1) twos^(i2) for i = i1*r + i2."""
    i1, i2 = divmod(i, root)
    return [alpha.letter(bit, j)] * (3 * root + i1) + [alpha.two(j)] * i2


def dictionary(alpha: _Alphabet, root: int) -> list[int]:
    d = alpha.d
    out: list[int] = []
    for j in range(1, d + 1):
        out += [alpha.zero(j)] * (4 * root) + [alpha.two(j)] * root
        out.append(alpha.sep())
    for j in range(1, d + 1):
        for i2 in range(0, root + 1):
            for x in (0, 1):
                for y in (0, 1):
                    out += [alpha.letter(x, j)] * (2 * root)
                    out += [alpha.two(j)] * i2
                    out += [alpha.letter(y, j + 1)] * (2 * root)
                    out.append(alpha.sep())
    return out


def b_coordinate(alpha: _Alphabet, root: int, j: int, bit: int,
                 middle_sep: int) -> list[int]:
    if bit:
        return ([alpha.one(j)] * (2 * root) + [middle_sep]
                + [alpha.one(j)] * (2 * root) + [alpha.two(j)] * root)
    return [alpha.one(j)] * (4 * root + 1) + [alpha.two(j)] * root


def b_vector(alpha: _Alphabet, root: int, u, middle_seps) -> list[int]:
    out: list[int] = []
    for j in range(1, alpha.d + 1):
        out += b_coordinate(alpha, root, j, u[j - 1], middle_seps[j - 1])
        out.append(alpha.sep())
    return out


def build_gadgets(inst: OVInstance) -> dict:
    """All blocks for the instance, with positions needed by the driver.

    The query-vector block is built for all-ones; flipping coordinate j of
    the query vector substitutes the block's middle symbol (a dedicated
    separator when u[j]=1, the letter one_j when u[j]=0).
    """
    n, d, root = inst.n, inst.d, inst.root
    alpha = _Alphabet(d)
    dict_syms = dictionary(alpha, root)
    middle_seps = [alpha.sep() for _ in range(d)]
    bvec = b_vector(alpha, root, (1,) * d, middle_seps)
    # middle symbol offset inside coordinate block j: 2*root (0-based)
    flip_pos = []
    off = len(dict_syms)
    for j in range(1, d + 1):
        flip_pos.append(off + 2 * root + 1)  # 1-based position in the string
        off += 5 * root + 1 + 1              # block plus trailing separator
    matrix: list[int] = []
    row_bounds = []  # (start, end) of each row block incl. trailing separator
    base = len(dict_syms) + len(bvec)
    for i in range(1, n + 1):
        row: list[int] = []
        for j in range(1, d + 1):
            row += a_coordinate(alpha, root, i, j, inst.a[i - 1][j - 1])
        row.append(alpha.sep())
        row_bounds.append((base + len(matrix) + 1, base + len(matrix) + len(row)))
        matrix += row
    legend = {
        "d": d, "n": n, "root": root,
        "zero": [alpha.zero(j) for j in range(1, d + 2)],
        "one": [alpha.one(j) for j in range(1, d + 2)],
        "two": [alpha.two(j) for j in range(1, d + 1)],
        "middle_seps": middle_seps,
        "flip_positions": flip_pos,
        "row_bounds": row_bounds,
    }
    return {
        "dictionary": dict_syms,
        "bvector": bvec,
        "matrix": matrix,
        "legend": legend,
        "alphabet": alpha,
        "middle_seps": middle_seps,
        "flip_positions": flip_pos,
        "row_bounds": row_bounds,
    }


def build_s(inst: OVInstance) -> GadgetString:
    g = build_gadgets(inst)
    return GadgetString(g["dictionary"] + g["bvector"] + g["matrix"], g["legend"])


def build_s_prime(inst: OVInstance) -> GadgetString:
    g = build_gadgets(inst)
    return GadgetString(g["dictionary"] + g["bvector"], g["legend"])


@dataclass
class OVReport:
    orthogonal_found: bool
    per_vector: list[dict]       # one entry per u in B
    expected_full_diff: int      # (d+2)*n


def solve_ov(inst: OVInstance, engine_factory) -> OVReport:
    """Drive two engines over all query vectors; exact phrase-count readout.

    engine_factory(symbols) -> engine supporting update/lz_length/lz_size.
    """
    g = build_gadgets(inst)
    n, d = inst.n, inst.d
    full = g["dictionary"] + g["bvector"] + g["matrix"]
    pref = g["dictionary"] + g["bvector"]
    eng_full = engine_factory(full)
    eng_pref = engine_factory(pref)
    one_codes = [g["alphabet"].one(j) for j in range(1, d + 1)]
    found = False
    per_vector = []
    from .dynstr import EditKind, EditOp
    for u in inst.b:
        flips = [j for j in range(d) if u[j] == 0]
        for j in flips:
            op = EditOp(EditKind.SUBSTITUTE, g["flip_positions"][j], one_codes[j])
            eng_full.update(op)
            eng_pref.update(op)
        total_full = eng_full.lz_size()
        total_pref = eng_pref.lz_size()
        diff = total_full - total_pref
        counts = []
        for start, end in g["row_bounds"]:
            counts.append(eng_full.lz_length(end) - eng_full.lz_length(start - 1))
        orth_here = diff < (d + 2) * n
        found = found or orth_here
        per_vector.append({
            "u": list(u),
            "lz_full": total_full,
            "lz_prefix": total_pref,
            "diff": diff,
            "row_phrases": counts,
            "orthogonal_with_some_row": orth_here,
        })
        for j in flips:
            op = EditOp(EditKind.SUBSTITUTE, g["flip_positions"][j],
                        g["middle_seps"][j])
            eng_full.update(op)
            eng_pref.update(op)
    return OVReport(found, per_vector, (d + 2) * n)
