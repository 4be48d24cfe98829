"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Scales follow the stated minimums; expect the full module to take tens of
minutes.  Run with `pytest tests/test_acceptance.py -s` to watch progress.
"""

import math
import random
import sys
import time

import pytest

from dynlz import Engine, FastIndex, NaiveIndex
from dynlz.gadgets import OVInstance, brute_orthogonal_pairs, solve_ov
from dynlz.oracle import (critical_sequence_brute, lpf_array_brute,
                          lz77_brute, nd_extension_sum, to_text)
from dynlz.runner import scaling_report

from conftest import make_symbols, random_edit

MASTER_SEED = 20250809


def report(name: str, ok: bool, detail: str = ""):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}"
    if detail:
        line += f"  ({detail})"
    print(line, file=sys.stderr)
    assert ok, line


# -- criteria 1-3: randomized oracle equivalence sweep -------------------------

class SweepOutcome:
    scripts = 0
    steps = 0
    parent_mismatches = 0
    query_mismatches = 0
    depth_mismatches = 0
    monotonicity_violations = 0
    first_failure = None


def _run_sweep_script(rng, out, n0, steps, alpha, backend, tree, edge_bias):
    seed = rng.randrange(1 << 30)
    syms = make_symbols(rng, n0, alpha)
    eng = Engine(syms, backend=backend, tree=tree, seed=seed)
    for _ in range(steps):
        op = random_edit(rng, len(eng), alpha, edge_bias)
        eng.update(op)
        out.steps += 1
        syms = eng.symbols()
        lpf = lpf_array_brute(syms)
        parents = [0] + [i + max(lpf[i], 1) for i in range(1, len(syms) + 1)]
        got = eng.parent_ranks()
        if got != parents:
            out.parent_mismatches += 1
            out.first_failure = out.first_failure or (syms, op, got, parents)
            return
        f = parents[1:]
        if any(x > y for x, y in zip(f, f[1:])):
            out.monotonicity_violations += 1
        phrases = lz77_brute(syms)
        if eng.lz_size() != len(phrases):
            out.depth_mismatches += 1
            return
        if syms:
            # the three queries, sampled
            t = rng.randint(1, len(phrases))
            ph = eng.select_phrase(t)
            if (ph.start, ph.end) != (phrases[t - 1].start, phrases[t - 1].end):
                out.query_mismatches += 1
            i = rng.randint(1, len(syms))
            cp = eng.containing_phrase(i)
            expect = next(p for p in phrases if p.start <= i <= p.end)
            if (cp.start, cp.end) != (expect.start, expect.end):
                out.query_mismatches += 1
            if eng.lz_length(i) != sum(1 for p in phrases if p.start <= i):
                out.query_mismatches += 1
    return


@pytest.fixture(scope="session")
def sweep():
    rng = random.Random(MASTER_SEED)
    out = SweepOutcome()
    t0 = time.time()
    total_scripts = 20_000
    for k in range(total_scripts):
        out.scripts += 1
        roll = k % 50
        alpha = rng.choice([1, 2, 2, 3, 4])
        backend = "fast" if k % 2 == 0 else "naive"
        tree = "fast" if k % 7 != 0 else "naive"
        edge = 0.5 if k % 5 == 0 else 0.15
        if roll < 46:
            _run_sweep_script(rng, out, rng.choice([0, 1, 2, 4, 8, 16, 32, 48]),
                              rng.choice([8, 10, 14]), alpha, backend, tree,
                              edge)
        elif roll < 49:
            _run_sweep_script(rng, out, rng.randint(60, 170), 10, alpha,
                              backend, tree, edge)
        else:
            _run_sweep_script(rng, out, rng.randint(200, 290), 10, alpha,
                              backend, tree, edge)
        if out.parent_mismatches or out.depth_mismatches:
            break
    out.elapsed = time.time() - t0
    return out


def test_criterion_1_oracle_equivalence(sweep):
    detail = (f"{sweep.scripts} scripts, {sweep.steps} steps, "
              f"{sweep.elapsed:.0f}s, seed={MASTER_SEED}")
    if sweep.first_failure:
        syms, op, got, expect = sweep.first_failure
        detail += f"; first failure on {to_text(syms)!r} after {op}"
    ok = (sweep.parent_mismatches == 0 and sweep.query_mismatches == 0
          and sweep.scripts >= 20_000)
    report("criterion 1: engine equals oracle on randomized edit scripts",
           ok, detail)


def test_criterion_2_depth_equals_phrase_count(sweep):
    report("criterion 2: tree depth of position 1 equals phrase count",
           sweep.depth_mismatches == 0,
           f"checked on {sweep.steps} states")


def test_criterion_3_monotonicity(sweep):
    report("criterion 3: i+lpf(i) is non-decreasing on every tested state",
           sweep.monotonicity_violations == 0,
           f"checked on {sweep.steps} states")


# -- criterion 4: backend equivalence ------------------------------------------

def test_criterion_4_backend_equivalence():
    seed = MASTER_SEED + 4
    rng = random.Random(seed)
    checks = 0
    mismatches = 0
    t0 = time.time()
    while checks < 100_000:
        n0 = rng.randint(1, 500)
        alpha = rng.choice([1, 2, 3, 4])
        syms = make_symbols(rng, n0, alpha)
        ni = NaiveIndex(syms)
        fi = FastIndex(syms, seed=rng.randrange(1 << 30))
        for _ in range(rng.randint(4, 10)):
            for _ in range(rng.randint(10, 30)):
                n = len(ni)
                if n == 0:
                    break
                i, j = rng.randint(1, n), rng.randint(1, n)
                a = rng.randint(1, n)
                b = rng.randint(a, n)
                pi = rng.randint(1, n)
                pj = rng.randint(pi, min(n, pi + rng.choice([0, 2, 8, 24])))
                kind = rng.randrange(6)
                if kind == 0:
                    same = ni.lcp(i, j) == fi.lcp(i, j)
                elif kind == 1:
                    same = ni.lcs(i, j) == fi.lcs(i, j)
                elif kind == 2:
                    same = ni.exists((pi, pj), (a, b)) == \
                        fi.exists((pi, pj), (a, b))
                elif kind == 3:
                    same = (ni.first_occ((pi, pj), (a, b)) ==
                            fi.first_occ((pi, pj), (a, b)) and
                            ni.last_occ((pi, pj), (a, b)) ==
                            fi.last_occ((pi, pj), (a, b)))
                elif kind == 4:
                    same = ni.clusters((pi, pj), (a, b)) == \
                        fi.clusters((pi, pj), (a, b))
                else:
                    plen = pj - pi + 1
                    t0p = rng.randint(max(1, pi - plen), pi)
                    t1p = min(n, t0p + 2 * plen - 1)
                    same = ni.ipm((pi, pj), (t0p, t1p)) == \
                        fi.ipm((pi, pj), (t0p, t1p))
                mismatches += 0 if same else 1
                checks += 1
            op = random_edit(rng, len(ni), alpha)
            ni.apply_edit(op)
            fi.apply_edit(op)
            if ni.symbols() != fi.symbols():
                mismatches += 1
    report("criterion 4: fast backend equals naive backend",
           mismatches == 0,
           f"{checks} queries, hash seed root={seed}, "
           f"{time.time() - t0:.0f}s")


# -- criterion 5: gadget phrase counts -----------------------------------------

def test_criterion_5_gadget_phrase_counts():
    rng = random.Random(MASTER_SEED + 5)
    t0 = time.time()
    pairs = 50
    count_errors = 0
    verdict_errors = 0
    instances = 0
    for n in (4, 9, 16):
        for d in range(2, 7):
            for _ in range(pairs):
                inst = OVInstance(
                    tuple(tuple(rng.randint(0, 1) for _ in range(d))
                          for _ in range(n)),
                    tuple(tuple(rng.randint(0, 1) for _ in range(d))
                          for _ in range(n)))
                instances += 1
                rep = solve_ov(inst, lambda s: Engine(s, backend="naive"))
                brute = bool(brute_orthogonal_pairs(inst))
                if rep.orthogonal_found != brute:
                    verdict_errors += 1
                for entry, u in zip(rep.per_vector, inst.b):
                    expect = [d + 1 + (1 if any(x and y for x, y in zip(v, u))
                                       else 0) for v in inst.a]
                    if entry["row_phrases"] != expect:
                        count_errors += 1
                    full = entry["diff"] == (d + 2) * n
                    orth_u = any(not any(x and y for x, y in zip(v, u))
                                 for v in inst.a)
                    if full == orth_u:
                        verdict_errors += 1
    report("criterion 5: gadget phrase counts are d+1+<u,v> exactly",
           count_errors == 0 and verdict_errors == 0,
           f"{instances} instances, {time.time() - t0:.0f}s")


# -- criterion 6: critical sequences -------------------------------------------

def test_criterion_6_critical_sequences():
    rng = random.Random(MASTER_SEED + 6)
    t0 = time.time()
    cases = 0
    mismatches = 0
    while cases < 1000:
        n = rng.randint(2, 500)
        alpha = rng.choice([1, 2, 3, 4])
        syms = make_symbols(rng, n, alpha)
        eng = Engine(syms, backend=rng.choice(["naive", "fast"]),
                     seed=rng.randrange(1 << 30))
        lpf = lpf_array_brute(syms)
        for _ in range(10):
            i = rng.randint(1, n)
            j = rng.randint(i, n)
            if eng.critical_sequence(i, j) != \
                    critical_sequence_brute(lpf, i, j):
                mismatches += 1
            cases += 1
    report("criterion 6: critical sequences match the definitional scan",
           mismatches == 0, f"{cases} instances, {time.time() - t0:.0f}s")


# -- criterion 7: query-count budget -------------------------------------------

def test_criterion_7_query_count_budget():
    t0 = time.time()
    ns = [1 << k for k in range(10, 17)]
    rep = scaling_report(ns, steps=200, seed=MASTER_SEED + 7)
    exponent = rep["exponent"]
    top = next(r for r in rep["rows"] if r["n"] == 1 << 16)
    rows = " ".join(f"n=2^{int(math.log2(r['n']))}:{r['mean_calls']:.0f}"
                    for r in rep["rows"])
    ok = exponent <= 0.75 and top["mean_calls"] * 20 <= 65536
    report("criterion 7: per-update primitive calls fit the sublinear budget",
           ok,
           f"exponent={exponent:.3f} (limit 0.75), mean@2^16="
           f"{top['mean_calls']:.0f} (limit {65536 / 20:.0f}), {rows}, "
           f"{time.time() - t0:.0f}s")


# -- criterion 8: dominant-extension diagnostic --------------------------------

def test_criterion_8_nd_extension_bounds():
    rng = random.Random(MASTER_SEED + 8)
    t0 = time.time()
    worst_const = 0.0
    hard_violations = 0
    soft_violations = 0
    cases = 0
    for _ in range(100):
        n = rng.randint(4, 2000)
        alpha = rng.choice([1, 2, 3, 4])
        syms = make_symbols(rng, n, alpha)
        k = rng.randint(2, min(n, 150))
        idx = sorted(rng.sample(range(1, n + 1), k))
        total = nd_extension_sum(syms, idx)
        cases += 1
        if total > k * k:
            hard_violations += 1
        logs = (math.ceil(math.log2(n)) + 1) ** 2
        const = total / (k * logs)
        worst_const = max(worst_const, const)
        if total > k * logs * 16:
            soft_violations += 1
    report("criterion 8: non-dominated extension sums stay within bounds",
           hard_violations == 0 and soft_violations == 0,
           f"{cases} cases, empirical constant {worst_const:.3f} "
           f"(budget 16), {time.time() - t0:.0f}s")


# -- criterion 9: factorization minimality -------------------------------------

def _min_lz77_like(text: str) -> int:
    n = len(text)
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        for i in range(1, j + 1):
            piece = text[i - 1:j]
            if len(piece) == 1 or text.find(piece, 0, j - 1) != -1:
                cand = best[i - 1] + 1
                if cand < best[j]:
                    best[j] = cand
    return best[n]


def test_criterion_9_factorization_minimality():
    t0 = time.time()
    checked = 0
    non_minimal = 0
    for n in range(0, 13):
        for mask in range(1 << n if n else 1):
            text = "".join("ab"[(mask >> k) & 1] for k in range(n))
            greedy = len(lz77_brute([ord(c) for c in text]))
            if greedy != _min_lz77_like(text):
                non_minimal += 1
            checked += 1
    report("criterion 9: greedy factorization is minimal among "
           "left-copy factorizations",
           non_minimal == 0,
           f"{checked} strings up to length 12, {time.time() - t0:.0f}s")
