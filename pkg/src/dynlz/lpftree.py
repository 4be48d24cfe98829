"""Dynamic rooted tree over string positions with weighted-depth queries.

The tree keeps parent(i) = i + max(LPF(i), 1) while the engine edits it.
Supported operations: insert isolated node, delete leaf, link root under a
parent, move a consecutive-rank interval of one node's children under a new
parent, depth, and level ancestor.

Two implementations share the key-based interface (keys are DynString nodes
plus one virtual-root sentinel per tree):

- NaiveLpfTree: parent dictionary, linear walks.  Reference semantics.
- LpfTree: every node's children sit in a treap ordered by current rank, and
  the treap shape is mirrored edge-for-edge into a splay-based link-cut
  forest.  Edges from a bundle root to its owning parent weigh 1, edges
  inside a bundle weigh 0, so the weighted depth of a node in the link-cut
  forest equals its depth in the phrase tree.  All operations are
  polylogarithmic amortized.
"""

from __future__ import annotations

import random


class TreeError(Exception):
    pass


class _Root:
    """Per-tree virtual root sentinel."""
    __slots__ = ()

    def __repr__(self):
        return "<virtual-root>"


# ---------------------------------------------------------------------------
# naive reference
# ---------------------------------------------------------------------------

class NaiveLpfTree:
    def __init__(self, rank_of):
        self.rank_of = rank_of
        self.root = _Root()
        self.parent: dict = {self.root: None}

    def __contains__(self, key):
        return key in self.parent

    def insert(self, key):
        if key in self.parent:
            raise TreeError("node already present")
        self.parent[key] = None

    def delete(self, key):
        if key is self.root:
            raise TreeError("cannot delete the root")
        if any(p is key for p in self.parent.values()):
            raise TreeError("delete requires a leaf")
        del self.parent[key]

    def link(self, key, parent_key):
        if self.parent.get(key, False) is not None:
            raise TreeError("link requires an isolated root")
        if parent_key not in self.parent:
            raise TreeError("unknown parent")
        self.parent[key] = parent_key

    def parent_of(self, key):
        return self.parent[key]

    def move_interval(self, dest_key, lo_key, hi_key):
        lo, hi = self.rank_of(lo_key), self.rank_of(hi_key)
        members = [k for k in self.parent
                   if k is not self.root and lo <= self.rank_of(k) <= hi]
        parents = {id(self.parent[k]) for k in members}
        if len(parents) > 1:
            raise TreeError(f"move_interval: interval [{lo}..{hi}] spans "
                            f"{len(parents)} parents")
        for k in members:
            self.parent[k] = dest_key

    def get_depth(self, key) -> int:
        d = 0
        k = self.parent[key]
        while k is not None:
            d += 1
            k = self.parent[k]
        return d

    def level_ancestor(self, key, k: int):
        if k < 0 or k > self.get_depth(key):
            raise TreeError(f"level ancestor {k} out of range")
        node = key
        for _ in range(k):
            node = self.parent[node]
        return node


# ---------------------------------------------------------------------------
# link-cut forest with treap child bundles
# ---------------------------------------------------------------------------

class _TNode:
    __slots__ = ("key", "t_left", "t_right", "t_parent", "t_prio", "t_owner",
                 "child_root", "sp_left", "sp_right", "sp_parent", "val",
                 "sum", "up")

    def __init__(self, key, prio):
        self.key = key
        self.t_left = self.t_right = self.t_parent = None
        self.t_prio = prio
        self.t_owner = None
        self.child_root = None
        self.sp_left = self.sp_right = self.sp_parent = None
        self.val = 0
        self.sum = 0
        self.up = None


def _is_sp_root(x):
    p = x.sp_parent
    return p is None or (p.sp_left is not x and p.sp_right is not x)


def _sp_pull(x):
    s = x.val
    if x.sp_left is not None:
        s += x.sp_left.sum
    if x.sp_right is not None:
        s += x.sp_right.sum
    x.sum = s


def _sp_rotate(x):
    p = x.sp_parent
    g = p.sp_parent
    p_was_root = _is_sp_root(p)
    if p.sp_left is x:
        p.sp_left = x.sp_right
        if x.sp_right is not None:
            x.sp_right.sp_parent = p
        x.sp_right = p
    else:
        p.sp_right = x.sp_left
        if x.sp_left is not None:
            x.sp_left.sp_parent = p
        x.sp_left = p
    p.sp_parent = x
    x.sp_parent = g
    if not p_was_root:
        if g.sp_left is p:
            g.sp_left = x
        else:
            g.sp_right = x
    _sp_pull(p)
    _sp_pull(x)


def _sp_splay(x):
    while not _is_sp_root(x):
        p = x.sp_parent
        if _is_sp_root(p):
            _sp_rotate(x)
        else:
            g = p.sp_parent
            if (g.sp_left is p) == (p.sp_left is x):
                _sp_rotate(p)
                _sp_rotate(x)
            else:
                _sp_rotate(x)
                _sp_rotate(x)


def _lct_access(x):
    _sp_splay(x)
    if x.sp_right is not None:
        x.sp_right = None  # old child keeps sp_parent as a path pointer
        _sp_pull(x)
    while x.sp_parent is not None:
        w = x.sp_parent
        _sp_splay(w)
        w.sp_right = x  # x.sp_parent is already w
        _sp_pull(w)
        _sp_splay(x)
    return x


def _lct_link(child, parent, weight):
    _lct_access(child)
    _lct_access(parent)
    child.sp_parent = parent
    child.val = weight
    _sp_pull(child)


def _lct_cut(child):
    _lct_access(child)
    l = child.sp_left
    if l is not None:
        l.sp_parent = None
        child.sp_left = None
    child.val = 0
    _sp_pull(child)


class LpfTree:
    def __init__(self, rank_of, seed: int = 0):
        self.rank_of = rank_of
        self._rng = random.Random(seed ^ 0xD1B54A32D192ED03)
        self.root = _Root()
        self._nodes: dict = {self.root: _TNode(self.root, self._rng.getrandbits(60))}
        self.moves = 0          # move_interval/link calls issued
        self.effective_moves = 0  # calls that changed at least one parent

    # -- bookkeeping ---------------------------------------------------------

    def __contains__(self, key):
        return key in self._nodes

    def __len__(self):
        return len(self._nodes)

    def _get(self, key) -> _TNode:
        try:
            return self._nodes[key]
        except KeyError:
            raise TreeError(f"unknown tree node {key!r}") from None

    # treap field setters record every touched node for the edge sync pass

    def _set_left(self, x, c, touched):
        x.t_left = c
        touched.add(x)
        if c is not None:
            c.t_parent = x
            c.t_owner = None
            touched.add(c)

    def _set_right(self, x, c, touched):
        x.t_right = c
        touched.add(x)
        if c is not None:
            c.t_parent = x
            c.t_owner = None
            touched.add(c)

    def _set_bundle(self, owner, root, touched):
        owner.child_root = root
        if root is not None:
            root.t_parent = None
            root.t_owner = owner
            touched.add(root)

    def _sync(self, touched):
        pending = []
        for x in touched:
            if x.t_parent is not None:
                desired = (x.t_parent, 0)
            elif x.t_owner is not None:
                desired = (x.t_owner, 1)
            else:
                desired = None
            if x.up == desired:
                continue
            if x.up is not None:
                _lct_cut(x)
                x.up = None
            if desired is not None:
                pending.append((x, desired))
        for x, desired in pending:
            _lct_link(x, desired[0], desired[1])
            x.up = desired

    # -- treap split/merge -----------------------------------------------------

    def _split_le(self, root, bound, touched, ranks):
        """(nodes with rank <= bound, the rest); both returned as roots."""
        if root is None:
            return None, None
        k = root.key
        r = ranks.get(k)
        if r is None:
            r = ranks[k] = self.rank_of(k)
        if r <= bound:
            a, b = self._split_le(root.t_right, bound, touched, ranks)
            self._set_right(root, a, touched)
            if b is not None:
                b.t_parent = None
                touched.add(b)
            root.t_parent = None
            touched.add(root)
            return root, b
        a, b = self._split_le(root.t_left, bound, touched, ranks)
        self._set_left(root, b, touched)
        if a is not None:
            a.t_parent = None
            touched.add(a)
        root.t_parent = None
        touched.add(root)
        return a, root

    def _merge(self, a, b, touched):
        if a is None:
            return b
        if b is None:
            return a
        if a.t_prio >= b.t_prio:
            self._set_right(a, self._merge(a.t_right, b, touched), touched)
            a.t_parent = None
            touched.add(a)
            return a
        self._set_left(b, self._merge(a, b.t_left, touched), touched)
        b.t_parent = None
        touched.add(b)
        return b

    # -- public operations --------------------------------------------------

    def insert(self, key):
        if key in self._nodes:
            raise TreeError("node already present")
        self._nodes[key] = _TNode(key, self._rng.getrandbits(60))

    def link(self, key, parent_key):
        v = self._get(key)
        if v.t_parent is not None or v.t_owner is not None:
            raise TreeError("link requires an isolated root")
        p = self._get(parent_key)
        self.moves += 1
        self.effective_moves += 1
        touched = set()
        ranks: dict = {}
        r = self.rank_of(key)
        a, b = self._split_le(p.child_root, r, touched, ranks)
        self._set_bundle(p, self._merge(self._merge(a, v, touched), b, touched),
                         touched)
        self._sync(touched)

    def parent_of(self, key):
        x = self._get(key)
        while x.t_parent is not None:
            x = x.t_parent
        return x.t_owner.key if x.t_owner is not None else None

    def _owner_root(self, x):
        while x.t_parent is not None:
            x = x.t_parent
        return x

    def delete(self, key):
        if key is self.root:
            raise TreeError("cannot delete the root")
        v = self._get(key)
        if v.child_root is not None:
            raise TreeError("delete requires a leaf")
        if v.t_parent is None and v.t_owner is None:
            del self._nodes[key]
            return
        touched = set()
        owner = self._owner_root(v).t_owner
        # rotate v down to a treap leaf, then detach it
        while v.t_left is not None or v.t_right is not None:
            l, r = v.t_left, v.t_right
            c = l if (r is None or (l is not None and l.t_prio >= r.t_prio)) else r
            g = v.t_parent
            if c is l:
                self._set_left(v, c.t_right, touched)
                self._set_right(c, v, touched)
            else:
                self._set_right(v, c.t_left, touched)
                self._set_left(c, v, touched)
            if g is not None:
                if g.t_left is v:
                    self._set_left(g, c, touched)
                else:
                    self._set_right(g, c, touched)
            else:
                c.t_parent = None
                touched.add(c)
        g = v.t_parent
        if g is not None:
            if g.t_left is v:
                self._set_left(g, None, touched)
            else:
                self._set_right(g, None, touched)
            new_root = self._owner_root(g)
        else:
            new_root = None
        v.t_parent = None
        v.t_owner = None
        touched.add(v)
        self._set_bundle(owner, new_root, touched)
        self._sync(touched)
        del self._nodes[key]

    def move_interval(self, dest_key, lo_key, hi_key):
        dest = self._get(dest_key)
        self._get(lo_key)
        u_key = self.parent_of(lo_key)
        if u_key is None:
            if lo_key is not hi_key:
                raise TreeError("move_interval on parentless range")
            # single isolated root: a link
            self.link(lo_key, dest_key)
            return
        u = self._get(u_key)
        self.moves += 1
        if u_key is dest_key:
            return  # nothing changes
        self.effective_moves += 1
        touched = set()
        ranks: dict = {}
        r_lo = self.rank_of(lo_key)
        r_hi = r_lo if hi_key is lo_key else self.rank_of(hi_key)
        a, rest = self._split_le(u.child_root, r_lo - 1, touched, ranks)
        mid, b = self._split_le(rest, r_hi, touched, ranks)
        if mid is None:
            raise TreeError("move_interval: empty selection")
        self._set_bundle(u, self._merge(a, b, touched), touched)
        x, y = self._split_le(dest.child_root, r_lo - 1, touched, ranks)
        self._set_bundle(
            dest, self._merge(self._merge(x, mid, touched), y, touched), touched)
        self._sync(touched)

    def get_depth(self, key) -> int:
        x = self._get(key)
        _lct_access(x)
        return x.sum

    def level_ancestor(self, key, k: int):
        x = self._get(key)
        _lct_access(x)
        d = x.sum
        if k < 0 or k > d:
            raise TreeError(f"level ancestor {k} out of range (depth {d})")
        target = d - k
        node = x
        acc = 0
        best = None
        while node is not None:
            ls = node.sp_left.sum if node.sp_left is not None else 0
            c = acc + ls + node.val
            if c <= target:
                best = node
                acc = c
                node = node.sp_right
            else:
                node = node.sp_left
        _sp_splay(best)
        return best.key

    # -- debug ----------------------------------------------------------------

    def check_consistency(self):
        """Full sweep: every node's weighted depth equals its walk depth."""
        for key in list(self._nodes):
            d = 0
            k = key
            while True:
                p = self.parent_of(k)
                if p is None:
                    break
                d += 1
                k = p
            if self.get_depth(key) != d:
                raise TreeError(f"depth mismatch at {key!r}: "
                                f"{self.get_depth(key)} != {d}")
