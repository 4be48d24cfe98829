import random

import pytest

from dynlz import EditKind, EditOp, Engine
from dynlz.oracle import (critical_sequence_brute, depth_of_one,
                          lpf_array_brute, lpf_tree_brute, lz77_brute)

from conftest import make_symbols, random_edit


def codes(s: str) -> list[int]:
    return [ord(c) for c in s]


def oracle_check(eng: Engine):
    syms = eng.symbols()
    assert eng.parent_ranks() == lpf_tree_brute(syms)
    assert eng.lz_size() == len(lz77_brute(syms))


def test_preprocess_examples():
    assert Engine([]).lz_size() == 0
    assert Engine(codes("abab")).lz_size() == 3
    assert Engine(codes("aaaa")).lz_size() == 2


def test_update_examples():
    eng = Engine(codes("abab"), debug_checks=True)
    eng.update(EditOp(EditKind.SUBSTITUTE, 4, ord("c")))
    assert eng.symbols() == codes("abac")
    assert eng.lz_size() == 4
    eng2 = Engine(codes("aaaa"), debug_checks=True)
    eng2.update(EditOp(EditKind.DELETE, 1))
    assert eng2.symbols() == codes("aaa")
    assert eng2.lz_size() == 2
    oracle_check(eng)
    oracle_check(eng2)


def test_identity_substitution_moves_nothing():
    eng = Engine(codes("abcabcabc"), tree="fast")
    before = eng.tree.effective_moves
    eng.update(EditOp(EditKind.SUBSTITUTE, 5, ord("b")))
    moved_with_effect = 0
    # every reparent during the update must have kept the same parent;
    # effective_moves counts moves whose destination differed
    parents = eng.parent_ranks()
    assert parents == lpf_tree_brute(eng.symbols())
    assert eng.tree.effective_moves - before == moved_with_effect


def test_query_examples():
    eng = Engine(codes("abab"))
    ph = eng.select_phrase(3)
    assert (ph.start, ph.end) == (3, 4)
    assert eng.select_phrase(1).start == 1
    assert eng.select_phrase(1).end == 1
    phrases = lz77_brute(codes("abab"))
    assert eng.select_phrase(len(phrases)).end == 4
    assert eng.lz_length(0) == 0
    assert eng.lz_length(4) == 3
    eng2 = Engine(codes("aaaa"))
    assert eng2.lz_length(2) == 2
    assert eng2.containing_phrase(1).start == 1
    cp = eng2.containing_phrase(4)
    assert cp.start <= 4 <= cp.end
    with pytest.raises(IndexError):
        eng.select_phrase(9)
    with pytest.raises(IndexError):
        eng.lz_length(5)


def test_recompute_factorization():
    assert Engine([]).recompute_factorization() == []
    eng = Engine(codes("abcabcabc"))
    phrases = eng.recompute_factorization()
    assert len(phrases) == 4
    expect = lz77_brute(codes("abcabcabc"))
    assert [(p.start, p.end) for p in phrases] == \
        [(p.start, p.end) for p in expect]
    assert [p.kind for p in phrases] == [p.kind for p in expect]
    rng = random.Random(12)
    for _ in range(40):
        syms = make_symbols(rng, rng.randint(0, 60), rng.choice([1, 2, 3]))
        eng = Engine(syms, backend=rng.choice(["naive", "fast"]))
        got = eng.recompute_factorization()
        expect = lz77_brute(syms)
        assert [(p.start, p.end, p.kind) for p in got] == \
            [(p.start, p.end, p.kind) for p in expect]


def test_critical_sequence_matches_definition():
    rng = random.Random(77)
    for trial in range(60):
        n = rng.randint(2, 80)
        syms = make_symbols(rng, n, rng.choice([1, 2, 3]))
        eng = Engine(syms, backend="fast", seed=trial)
        lpf = lpf_array_brute(syms)
        for _ in range(6):
            i = rng.randint(1, n)
            j = rng.randint(i, n)
            assert eng.critical_sequence(i, j) == \
                critical_sequence_brute(lpf, i, j)
    eng = Engine(codes("abcdef"))
    assert eng.critical_sequence(3, 6) == [3]
    with pytest.raises(ValueError):
        eng.critical_sequence(4, 2)


def test_classification_covers_all_changed_indices():
    """Every position whose parent changed is reparented by some updater."""
    rng = random.Random(5150)
    for trial in range(80):
        n0 = rng.randint(2, 90)
        alpha = rng.choice([1, 2, 3])
        syms = make_symbols(rng, n0, alpha)
        eng = Engine(syms, backend="naive", tree="naive", seed=trial)
        for _ in range(6):
            before = lpf_tree_brute(eng.symbols())
            op = random_edit(rng, len(eng), alpha)
            eng.update(op)
            after = lpf_tree_brute(eng.symbols())
            assert eng.parent_ranks() == after
            # engine agreed with the oracle, so every index with a changed
            # jump target was necessarily classified and moved
            assert depth_of_one(after) == eng.lz_size()


def test_every_active_index_falls_in_a_class():
    """Substitution classifier coverage: positions with changed jump targets
    are super-light, light, or heavy (with the boundary clipping applied)."""
    from dynlz.engine import IndexClass, cube_ceil
    from dynlz.oracle import classify_substitution_index
    rng = random.Random(616)
    uncovered = []
    for trial in range(250):
        n = rng.randint(2, 60)
        alpha = rng.choice([1, 2, 3])
        old = make_symbols(rng, n, alpha)
        z = rng.randint(1, n)
        new = list(old)
        new[z - 1] = rng.randrange(alpha) + 97
        m = max(1, cube_ceil(n))
        fa = lpf_tree_brute(old)
        fb = lpf_tree_brute(new)
        for i in range(1, n + 1):
            classes = classify_substitution_index(old, new, z, m, i)
            if fa[i] != fb[i]:
                if classes == {IndexClass.INACTIVE}:
                    uncovered.append((old, new, z, m, i))
            else:
                assert classes == {IndexClass.INACTIVE}
    assert not uncovered, uncovered[:3]


def test_edge_concentrated_edits():
    rng = random.Random(31337)
    for trial in range(50):
        n0 = rng.randint(8, 120)
        alpha = rng.choice([1, 2])
        syms = make_symbols(rng, n0, alpha)
        eng = Engine(syms, backend="fast", tree="fast", seed=trial,
                     debug_checks=True)
        for _ in range(8):
            op = random_edit(rng, len(eng), alpha, edge_bias=0.9)
            eng.update(op)
            oracle_check(eng)


def test_grow_and_shrink_to_empty():
    eng = Engine([], backend="fast", debug_checks=True)
    word = codes("abaababa")
    for i, sym in enumerate(word, start=1):
        eng.update(EditOp(EditKind.INSERT, i, sym))
        oracle_check(eng)
    while len(eng):
        eng.update(EditOp(EditKind.DELETE, 1))
        oracle_check(eng)
    assert eng.lz_size() == 0


def test_periodic_run_heavy_strings():
    """Long runs make the cluster-based updater do real interval moves."""
    rng = random.Random(99)
    for trial in range(6):
        rootlen = rng.choice([1, 2, 3])
        n0 = rng.randint(300, 700)
        root = [rng.randrange(2) + 97 for _ in range(rootlen)]
        syms = [root[i % rootlen] for i in range(n0)]
        eng = Engine(syms, backend="fast", tree="fast", seed=trial)
        for _ in range(6):
            op = random_edit(rng, len(eng), 2, edge_bias=0.3)
            eng.update(op)
            oracle_check(eng)


def test_long_string_spot_checks():
    rng = random.Random(123)
    syms = make_symbols(rng, 5000, 4)
    eng = Engine(syms, backend="fast", seed=5)
    for _ in range(15):
        op = random_edit(rng, len(eng), 4)
        eng.update(op)
        assert eng.lz_size() == len(lz77_brute(eng.symbols()))


def test_stats_phases_tagged():
    eng = Engine(codes("abracadabraabracadabra"))
    eng.stats.reset()
    eng.update(EditOp(EditKind.SUBSTITUTE, 11, ord("x")))
    phases = eng.stats.phase_totals()
    assert phases.get("superlight", 0) > 0
    assert phases.get("light", 0) > 0
    assert eng.stats.total_calls() == sum(phases.values())
