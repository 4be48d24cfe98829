import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynlz import DynString, EditKind, EditOp


def apply_model(model: list[int], op: EditOp):
    if op.kind is EditKind.INSERT:
        model.insert(op.pos - 1, op.symbol)
    elif op.kind is EditKind.DELETE:
        del model[op.pos - 1]
    else:
        model[op.pos - 1] = op.symbol


def test_basic_edits():
    ds = DynString([ord("a"), ord("b")])
    ds.apply_edit(EditOp(EditKind.INSERT, 3, ord("c")))
    assert ds.symbols() == [ord(c) for c in "abc"]
    ds2 = DynString([ord(c) for c in "abc"])
    ds2.apply_edit(EditOp(EditKind.DELETE, 2))
    assert ds2.symbols() == [ord(c) for c in "ac"]
    ds3 = DynString([ord(c) for c in "abc"])
    ds3.apply_edit(EditOp(EditKind.SUBSTITUTE, 2, ord("x")))
    assert ds3.symbols() == [ord(c) for c in "axc"]


def test_node_identity_shifts():
    ds = DynString([ord(c) for c in "abc"])
    n2 = ds.select(2)
    ds.apply_edit(EditOp(EditKind.DELETE, 1))
    assert ds.rank(n2) == 1
    ds = DynString([ord(c) for c in "abc"])
    n1 = ds.select(1)
    ds.apply_edit(EditOp(EditKind.INSERT, 1, ord("z")))
    assert ds.rank(n1) == 2


def test_dead_node_and_bounds():
    ds = DynString([ord(c) for c in "ab"])
    node = ds.select(2)
    ds.apply_edit(EditOp(EditKind.DELETE, 2))
    assert not node.alive
    with pytest.raises(ValueError):
        ds.rank(node)
    with pytest.raises(IndexError):
        ds.select(3)
    with pytest.raises(IndexError):
        ds.apply_edit(EditOp(EditKind.INSERT, 4, 5))
    with pytest.raises(IndexError):
        ds.apply_edit(EditOp(EditKind.DELETE, 2))
    with pytest.raises(ValueError):
        ds.apply_edit(EditOp(EditKind.INSERT, 1, -3))
    # failed edit leaves content unchanged
    assert ds.symbols() == [ord("a")]


def test_alphabet_bound():
    ds = DynString([], alphabet_bound=8)
    ds.apply_edit(EditOp(EditKind.INSERT, 1, 7))
    with pytest.raises(ValueError):
        ds.apply_edit(EditOp(EditKind.INSERT, 1, 8))


def test_edit_op_validation():
    with pytest.raises(ValueError):
        EditOp(EditKind.DELETE, 1, symbol=3)
    with pytest.raises(ValueError):
        EditOp(EditKind.INSERT, 1)


def test_randomized_model_equivalence_long():
    """Round-trip against a plain list model, with rank/select inversion and
    node-order preservation; 10^5 steps with sampled checks per step."""
    rng = random.Random(1)
    ds = DynString([])
    model: list[int] = []
    ordered: list = []   # nodes whose rank order was verified last checkpoint
    fresh: list = []     # nodes inserted since then
    steps = 100_000
    for step in range(steps):
        n = len(model)
        if n >= 600:
            kind = EditKind.DELETE
        else:
            kinds = [EditKind.INSERT] * 2
            if n:
                kinds += [EditKind.DELETE] * 2 + [EditKind.SUBSTITUTE]
            kind = rng.choice(kinds)
        hi = n + 1 if kind is EditKind.INSERT else n
        pos = rng.randint(1, hi)
        sym = rng.randrange(4) if kind is not EditKind.DELETE else None
        op = EditOp(kind, pos, sym)
        receipt = ds.apply_edit(op)
        apply_model(model, op)
        if kind is EditKind.INSERT and rng.random() < 0.02:
            fresh.append(receipt.pivot)
        # sampled rank/select inversion
        if model:
            for _ in range(3):
                i = rng.randint(1, len(model))
                node = ds.select(i)
                assert ds.rank(node) == i
                assert node.sym == model[i - 1]
        if step % 5000 == 0 or step == steps - 1:
            assert ds.symbols() == model
            survivors = [t for t in ordered if t.alive]
            ranks = [ds.rank(t) for t in survivors]
            assert all(x < y for x, y in zip(ranks, ranks[1:]))
            ordered = sorted(survivors + [t for t in fresh if t.alive],
                             key=ds.rank)
            fresh = []
    assert ds.symbols() == model


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(1, 30),
                          st.integers(0, 3)), max_size=40))
def test_hypothesis_model(ops):
    ds = DynString([])
    model: list[int] = []
    for kind_i, pos, sym in ops:
        n = len(model)
        if kind_i == 0:
            pos = 1 + pos % (n + 1)
            op = EditOp(EditKind.INSERT, pos, sym)
        elif n == 0:
            continue
        elif kind_i == 1:
            op = EditOp(EditKind.DELETE, 1 + pos % n)
        else:
            op = EditOp(EditKind.SUBSTITUTE, 1 + pos % n, sym)
        ds.apply_edit(op)
        apply_model(model, op)
        assert ds.symbols() == model
        assert len(ds) == len(model)
