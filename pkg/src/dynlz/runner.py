"""Script execution, oracle checking, reporting, and the scaling harness."""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .dynstr import EditOp
from .engine import Engine
from .oracle import lz77_brute, lpf_tree_brute
from .scripts import EditScript, Query, parse_script
from .stats import PRIMITIVES

PHASES = ("superlight", "light", "heavyL", "heavyR")

CSV_FIELDS = ("step", "op", "answer", "length",
              "calls_lcp", "calls_lcs", "calls_ipm", "calls_exists",
              "calls_firstocc", "calls_lastocc", "calls_clusters",
              "calls_period",
              "phase_superlight", "phase_light", "phase_heavyL",
              "phase_heavyR", "wall_ns")

_CALL_KEY = {"lcp": "calls_lcp", "lcs": "calls_lcs", "ipm": "calls_ipm",
             "exists": "calls_exists", "first_occ": "calls_firstocc",
             "last_occ": "calls_lastocc", "clusters": "calls_clusters",
             "period": "calls_period"}


class OracleMismatch(Exception):
    def __init__(self, dump: dict):
        super().__init__(f"oracle mismatch at step {dump.get('step')}: "
                         f"{dump.get('what')}")
        self.dump = dump


@dataclass
class RunReport:
    config: dict
    steps: list[dict]
    final: dict
    timing: dict
    error: dict | None = None

    def to_dict(self) -> dict:
        out = {"config": self.config, "steps": self.steps,
               "final": self.final, "timing": self.timing}
        if self.error is not None:
            out["error"] = self.error
        return out

    def to_csv(self) -> str:
        lines = [",".join(CSV_FIELDS)]
        for s in self.steps:
            lines.append(",".join(str(s.get(f, "")) for f in CSV_FIELDS))
        return "\n".join(lines) + "\n"


def _op_text(op: EditOp) -> str:
    if op.symbol is None:
        return f"{op.kind.value} {op.pos}"
    return f"{op.kind.value} {op.pos} {op.symbol}"


def _check_against_oracle(eng: Engine, step_no: int, history: list[str]):
    syms = eng.symbols()
    expect = lpf_tree_brute(syms)
    got = eng.parent_ranks()
    if got != expect:
        bad = [i for i in range(1, len(expect)) if expect[i] != got[i]]
        raise OracleMismatch({
            "step": step_no, "what": "parent array",
            "string": syms, "positions": bad,
            "expected": expect, "actual": got, "history": history,
        })
    phrases = lz77_brute(syms)
    if eng.lz_size() != len(phrases):
        raise OracleMismatch({
            "step": step_no, "what": "lz length",
            "string": syms, "expected": len(phrases), "actual": eng.lz_size(),
            "history": history,
        })


def _oracle_answer(eng: Engine, query: Query, step_no: int,
                   history: list[str], check: bool, answer: str):
    if not check:
        return
    syms = eng.symbols()
    phrases = lz77_brute(syms)
    if query.what == "lzlength":
        if query.arg is None:
            expect = str(len(phrases))
        else:
            expect = str(sum(1 for p in phrases if p.start <= query.arg))
    elif query.what == "select":
        p = phrases[query.arg - 1]
        expect = f"{p.start}:{p.end}"
    elif query.what == "contain":
        p = next(p for p in phrases if p.start <= query.arg <= p.end)
        expect = f"{p.start}:{p.end}"
    else:  # recompute
        expect = f"phrases={len(phrases)}"
    if expect != answer:
        raise OracleMismatch({
            "step": step_no, "what": f"query {query.what}",
            "string": syms, "expected": expect, "actual": answer,
            "history": history,
        })


def _answer_query(eng: Engine, query: Query) -> str:
    if query.what == "lzlength":
        if query.arg is None:
            return str(eng.lz_size())
        return str(eng.lz_length(query.arg))
    if query.what == "select":
        p = eng.select_phrase(query.arg)
        return f"{p.start}:{p.end}"
    if query.what == "contain":
        p = eng.containing_phrase(query.arg)
        return f"{p.start}:{p.end}"
    if query.what == "recompute":
        return f"phrases={len(eng.recompute_factorization())}"
    raise ValueError(f"unknown query {query.what!r}")


def run(script: EditScript | str, backend: str = "fast",
        check_oracle: bool = False, seed: int = 0, lmax: int | None = None,
        tree: str = "fast", debug_checks: bool = False) -> RunReport:
    if isinstance(script, str):
        script = parse_script(script)
    t_start = time.perf_counter_ns()
    eng = Engine(script.initial, backend=backend, tree=tree, seed=seed,
                 lmax=lmax, debug_checks=debug_checks)
    config = {"backend": backend, "tree": tree, "seed": seed,
              "lmax": lmax, "check_oracle": check_oracle,
              "m_policy": "ceil(n^(1/3))"}
    steps: list[dict] = []
    history: list[str] = []
    error = None
    if check_oracle:
        _check_against_oracle(eng, 0, history)
    for number, (line_no, cmd) in enumerate(script.commands, start=1):
        before = dict(eng.stats.totals)
        phases_before = eng.stats.phase_totals()
        t0 = time.perf_counter_ns()
        try:
            if isinstance(cmd, EditOp):
                history.append(_op_text(cmd))
                eng.update(cmd)
                answer = ""
                if check_oracle:
                    _check_against_oracle(eng, number, history)
            else:
                answer = _answer_query(eng, cmd)
                history.append(f"Q {cmd.what}" +
                               (f" {cmd.arg}" if cmd.arg is not None else ""))
                _oracle_answer(eng, cmd, number, history, check_oracle, answer)
        except OracleMismatch:
            raise
        except (IndexError, ValueError) as exc:
            error = {"line": line_no, "step": number, "message": str(exc)}
            break
        wall = time.perf_counter_ns() - t0
        row = {"step": number, "op": history[-1], "answer": answer,
               "length": len(eng), "wall_ns": wall}
        after = eng.stats.totals
        for prim in PRIMITIVES:
            row[_CALL_KEY[prim]] = after[prim] - before[prim]
        phases_after = eng.stats.phase_totals()
        for ph in PHASES:
            row[f"phase_{ph}"] = (phases_after.get(ph, 0)
                                  - phases_before.get(ph, 0))
        steps.append(row)
    final = {"length": len(eng), "lz_length": eng.lz_size(),
             "totals": dict(eng.stats.totals)}
    timing = {"total_wall_ns": time.perf_counter_ns() - t_start}
    return RunReport(config, steps, final, timing, error)


def _percentile(values: list[int], q: float) -> float:
    if not values:
        return 0.0
    v = sorted(values)
    k = max(0, min(len(v) - 1, math.ceil(q * len(v)) - 1))
    return float(v[k])


def fit_exponent(ns: list[int], means: list[float]) -> float:
    """Least-squares slope of log(mean) against log(n)."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(max(m, 1e-9)) for m in means]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def scaling_report(n_list: list[int], steps: int, seed: int,
                   backend: str = "fast", lmax: int | None = None,
                   alphabet: int = 4) -> dict:
    """Per-update primitive-call counts for random substitutions at each n."""
    rows = []
    for n in n_list:
        rng = random.Random(seed * 1_000_003 + n)
        symbols = [rng.randrange(alphabet) for _ in range(n)]
        lm = lmax if lmax is not None else max(6, round(n.bit_length() * 2 / 3))
        eng = Engine(symbols, backend=backend, lmax=lm, seed=seed)
        calls = []
        walls = []
        from .dynstr import EditKind
        for _ in range(steps):
            pos = rng.randint(1, n)
            sym = rng.randrange(alphabet)
            before = eng.stats.total_calls()
            t0 = time.perf_counter_ns()
            eng.update(EditOp(EditKind.SUBSTITUTE, pos, sym))
            walls.append(time.perf_counter_ns() - t0)
            calls.append(eng.stats.total_calls() - before)
        rows.append({
            "n": n, "steps": steps, "lmax": lm,
            "mean_calls": sum(calls) / len(calls),
            "p95_calls": _percentile(calls, 0.95),
            "max_calls": max(calls),
            "mean_wall_ns": sum(walls) / len(walls),
        })
    exponent = fit_exponent([r["n"] for r in rows],
                            [r["mean_calls"] for r in rows]) \
        if len(rows) >= 2 else float("nan")
    return {
        "config": {"backend": backend, "seed": seed, "steps": steps,
                   "alphabet": alphabet, "lmax": lmax,
                   "m_policy": "ceil(n^(1/3))"},
        "rows": rows,
        "exponent": exponent,
    }


def scaling_csv(report: dict) -> str:
    fields = ("n", "steps", "lmax", "mean_calls", "p95_calls", "max_calls",
              "mean_wall_ns")
    lines = [",".join(fields)]
    for r in report["rows"]:
        lines.append(",".join(str(r[f]) for f in fields))
    lines.append(f"# exponent,{report['exponent']}")
    return "\n".join(lines) + "\n"
