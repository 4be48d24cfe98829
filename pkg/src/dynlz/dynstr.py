"""Editable string over an integer alphabet with stable per-position node ids.

Positions are 1-based in the public API.  Each position is represented by a
tree node whose identity survives edits at other positions, so structures
built on top can keep references that do not shift when the string changes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

DEFAULT_ALPHABET_BOUND = 1 << 20


class EditKind(Enum):
    INSERT = "I"
    DELETE = "D"
    SUBSTITUTE = "S"


@dataclass(frozen=True)
class EditOp:
    kind: EditKind
    pos: int
    symbol: int | None = None

    def __post_init__(self):
        if self.kind is EditKind.DELETE:
            if self.symbol is not None:
                raise ValueError("delete takes no symbol")
        elif self.symbol is None:
            raise ValueError(f"{self.kind.value} needs a symbol")


@dataclass(frozen=True)
class EditReceipt:
    op: EditOp
    pivot: "Node"
    old_length: int
    new_length: int


class Node:
    """One string position.  Opaque to callers; compared by identity."""

    __slots__ = ("sym", "prio", "left", "right", "parent", "size", "alive")

    def __init__(self, sym: int, prio: int):
        self.sym = sym
        self.prio = prio
        self.left: Node | None = None
        self.right: Node | None = None
        self.parent: Node | None = None
        self.size = 1
        self.alive = True

    def __repr__(self):
        return f"<Node sym={self.sym} at {id(self):#x}>"


def _size(n: Node | None) -> int:
    return n.size if n is not None else 0


class DynString:
    """Treap-backed sequence of symbols with O(log n) rank/select/edit."""

    def __init__(self, symbols=(), alphabet_bound: int = DEFAULT_ALPHABET_BOUND,
                 seed: int = 0):
        self._rng = random.Random(seed ^ 0x9E3779B97F4A7C15)
        self.alphabet_bound = alphabet_bound
        self._root: Node | None = None
        for sym in symbols:
            self._check_symbol(sym)
            self._root = self._join(self._root, self._new_node(sym))

    # -- basics ------------------------------------------------------------

    def __len__(self) -> int:
        return _size(self._root)

    def _check_symbol(self, sym: int):
        if not (0 <= sym < self.alphabet_bound):
            raise ValueError(f"symbol {sym} outside [0, {self.alphabet_bound})")

    def _new_node(self, sym: int) -> Node:
        return Node(sym, self._rng.getrandbits(60))

    # -- treap plumbing ----------------------------------------------------

    @staticmethod
    def _pull(n: Node):
        n.size = 1 + _size(n.left) + _size(n.right)

    def _join(self, a: Node | None, b: Node | None) -> Node | None:
        if a is None:
            return b
        if b is None:
            return a
        if a.prio >= b.prio:
            r = self._join(a.right, b)
            a.right = r
            if r is not None:
                r.parent = a
            self._pull(a)
            a.parent = None
            return a
        l = self._join(a, b.left)
        b.left = l
        if l is not None:
            l.parent = b
        self._pull(b)
        b.parent = None
        return b

    def _split(self, n: Node | None, k: int):
        """Split into (first k nodes, rest)."""
        if n is None:
            return None, None
        if _size(n.left) >= k:
            l, r = self._split(n.left, k)
            n.left = r
            if r is not None:
                r.parent = n
            self._pull(n)
            n.parent = None
            if l is not None:
                l.parent = None
            return l, n
        l, r = self._split(n.right, k - _size(n.left) - 1)
        n.right = l
        if l is not None:
            l.parent = n
        self._pull(n)
        n.parent = None
        if r is not None:
            r.parent = None
        return n, r

    # -- queries -----------------------------------------------------------

    def select(self, i: int) -> Node:
        """Node at 1-based position i."""
        if not (1 <= i <= len(self)):
            raise IndexError(f"position {i} out of range 1..{len(self)}")
        n = self._root
        k = i
        while True:
            ls = _size(n.left)
            if k <= ls:
                n = n.left
            elif k == ls + 1:
                return n
            else:
                k -= ls + 1
                n = n.right

    def rank(self, node: Node) -> int:
        """1-based position of a live node."""
        if not node.alive:
            raise ValueError("dead node")
        r = _size(node.left) + 1
        n = node
        while n.parent is not None:
            if n.parent.right is n:
                r += _size(n.parent.left) + 1
            n = n.parent
        return r

    def char_at(self, i: int) -> int:
        return self.select(i).sym

    def symbols(self) -> list[int]:
        out: list[int] = []
        stack: list[tuple[Node, bool]] = [(self._root, False)] if self._root else []
        while stack:
            n, expanded = stack.pop()
            if n is None:
                continue
            if expanded:
                out.append(n.sym)
                continue
            stack.append((n.right, False))
            stack.append((n, True))
            stack.append((n.left, False))
        return out

    # -- edits -------------------------------------------------------------

    def apply_edit(self, op: EditOp) -> EditReceipt:
        n = len(self)
        kind, pos = op.kind, op.pos
        if kind is EditKind.INSERT:
            if not (1 <= pos <= n + 1):
                raise IndexError(f"insert position {pos} out of range 1..{n + 1}")
            self._check_symbol(op.symbol)
            node = self._new_node(op.symbol)
            l, r = self._split(self._root, pos - 1)
            self._root = self._join(self._join(l, node), r)
            return EditReceipt(op, node, n, n + 1)
        if kind is EditKind.DELETE:
            if not (1 <= pos <= n):
                raise IndexError(f"delete position {pos} out of range 1..{n}")
            l, rest = self._split(self._root, pos - 1)
            mid, r = self._split(rest, 1)
            mid.alive = False
            self._root = self._join(l, r)
            return EditReceipt(op, mid, n, n - 1)
        # substitute
        if not (1 <= pos <= n):
            raise IndexError(f"substitute position {pos} out of range 1..{n}")
        self._check_symbol(op.symbol)
        node = self.select(pos)
        node.sym = op.symbol
        return EditReceipt(op, node, n, n)
