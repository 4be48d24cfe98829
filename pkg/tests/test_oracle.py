import random

from dynlz.oracle import (critical_sequence_brute, critical_vs_nd_check,
                          depth_of_one, extension_points, lcp_matrix,
                          lpf_array_brute, lpf_table_brute, lpf_tree_brute,
                          lz77_brute, nd_extension_sum, pareto_front_size,
                          to_text)


def codes(s: str) -> list[int]:
    return [ord(c) for c in s]


def test_lz77_examples():
    assert len(lz77_brute(codes("a"))) == 1
    assert len(lz77_brute(codes("aaaa"))) == 2
    assert len(lz77_brute(codes("abcabcabc"))) == 4
    assert lz77_brute([]) == []
    phrases = lz77_brute(codes("abab"))
    assert [(p.start, p.end) for p in phrases] == [(1, 1), (2, 2), (3, 4)]
    assert [p.kind for p in phrases] == ["fresh", "fresh", "copy"]


def test_phrases_tile_and_sources():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(0, 60)
        s = [rng.randrange(3) for _ in range(n)]
        phrases = lz77_brute(s)
        pos = 1
        text = to_text(s)
        for p in phrases:
            assert p.start == pos
            pos = p.end + 1
            if p.kind == "copy":
                assert p.source is not None and p.source < p.start
                assert text[p.source - 1:p.source - 1 + p.length] == \
                    text[p.start - 1:p.start - 1 + p.length]
            else:
                assert p.length == 1
                assert text.find(text[p.start - 1], 0, p.start - 1) == -1
        assert pos == n + 1


def test_lpf_tables():
    assert lpf_array_brute(codes("abab")) == [0, 0, 0, 2, 1]
    assert lpf_array_brute(codes("abcd")) == [0, 0, 0, 0, 0]
    assert lpf_array_brute(codes("aaaa")) == [0, 0, 3, 2, 1]
    table, pos = lpf_table_brute(codes("abab"))
    assert table == [0, 0, 0, 2, 1]
    assert pos == [None, None, None, 1, 2]


def test_lpf_oracles_agree():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(0, 80)
        s = [rng.randrange(rng.choice([1, 2, 3, 4])) for _ in range(n)]
        a = lpf_array_brute(s)
        b, pos = lpf_table_brute(s)
        assert a == b
        # rightmost witness really witnesses
        text = to_text(s)
        for i in range(1, n + 1):
            if a[i] > 0:
                j = pos[i]
                assert text[j - 1:j - 1 + a[i]] == text[i - 1:i - 1 + a[i]]
                longer = text[i - 1:i - 1 + a[i] + 1]
                if i + a[i] <= n:
                    assert text.find(longer, 0, i + a[i] - 1) == -1


def test_depth_equals_phrase_count():
    rng = random.Random(2)
    for _ in range(200):
        n = rng.randint(0, 50)
        s = [rng.randrange(2) for _ in range(n)]
        assert depth_of_one(lpf_tree_brute(s)) == len(lz77_brute(s))


def test_critical_sequence_brute_examples():
    # uniform string: every f value jumps at its minimal attaining index
    s = codes("aabaab")
    lpf = lpf_array_brute(s)
    seq = critical_sequence_brute(lpf, 4, 4)
    f = [0] + [x + max(lpf[x], 1) for x in range(1, 7)]
    assert seq[0] == 4
    assert all(f[x] > 4 for x in seq)
    # no index reaches past j: singleton
    s2 = codes("abcdef")
    lpf2 = lpf_array_brute(s2)
    assert critical_sequence_brute(lpf2, 3, 6) == [3]


def test_pareto_front():
    assert pareto_front_size([(1, 1), (2, 2)]) == 1
    assert pareto_front_size([(1, 3), (3, 1)]) == 2
    assert pareto_front_size([(1, 3), (3, 1), (2, 2)]) == 3
    assert pareto_front_size([(1, 1), (1, 1)]) == 1
    assert pareto_front_size([]) == 0


def test_lcp_matrix():
    s = codes("abab")
    m = lcp_matrix(s)
    assert m[0][2] == 2
    assert m[0][0] == 4
    assert m[1][3] == 1


def test_nd_extension_sum_bounds():
    rng = random.Random(17)
    for _ in range(50):
        n = rng.randint(2, 120)
        s = [rng.randrange(2) for _ in range(n)]
        k = rng.randint(1, min(n, 20))
        idx = sorted(rng.sample(range(1, n + 1), k))
        total = nd_extension_sum(s, idx)
        assert 0 <= total <= k * k
    assert nd_extension_sum([0, 1, 0], [2]) == 0
    # two equal-context positions give a single dominating pair
    s = codes("abab")
    assert nd_extension_sum(s, [1, 3]) == 1


def test_extension_points_match_definitions():
    s = codes("abcabd")
    pts = extension_points(s, 4, [1])
    assert pts[0].right == 2  # common prefix of suffixes 4 and 1
    assert pts[0].left == 1   # common suffix of prefixes [1..4] and [1..1]


def test_critical_vs_nd_inequality():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randint(2, 120)
        s = [rng.randrange(rng.choice([1, 2, 3])) for _ in range(n)]
        i = rng.randint(1, n)
        j = rng.randint(i, n)
        assert critical_vs_nd_check(s, i, j)
