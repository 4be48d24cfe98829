"""Deterministic edit-script generators for benchmarks and stress runs."""

from __future__ import annotations

import random

KINDS = ("random", "periodic", "adversarial-edge")


def _emit_init(symbols) -> str:
    return "init " + " ".join(str(s) for s in symbols)


def gen_workload(kind: str, n: int, steps: int, seed: int,
                 alphabet: int = 4) -> str:
    """Edit-script text: deterministic in (kind, n, steps, seed, alphabet)."""
    if kind not in KINDS:
        raise ValueError(f"unknown workload kind {kind!r} (want one of {KINDS})")
    if n < 0 or steps < 0:
        raise ValueError("n and steps must be non-negative")
    rng = random.Random(seed)
    lines = [f"# workload kind={kind} n={n} steps={steps} "
             f"seed={seed} alphabet={alphabet}"]

    if kind == "periodic":
        rootlen = rng.choice([1, 2, 3])
        root = [rng.randrange(alphabet) for _ in range(rootlen)]
        symbols = [root[i % rootlen] for i in range(n)]
    else:
        symbols = [rng.randrange(alphabet) for _ in range(n)]
    lines.append(_emit_init(symbols))

    length = n
    m = max(1, round(max(length, 1) ** (1 / 3)))
    for step in range(steps):
        choices = ["S", "S", "I", "D"] if length > 0 else ["I"]
        op = rng.choice(choices)
        hi = length + 1 if op == "I" else length
        if kind == "adversarial-edge" and hi > 1:
            side = rng.random() < 0.5
            edge = min(m + 1, hi)
            pos = rng.randint(1, edge) if side else rng.randint(hi - edge + 1, hi)
        else:
            pos = rng.randint(1, hi)
        if op == "D":
            lines.append(f"D {pos}")
            length -= 1
        else:
            sym = rng.randrange(alphabet)
            lines.append(f"{op} {pos} {sym}")
            if op == "I":
                length += 1
        if step % 8 == 7:
            lines.append("Q lzlength")
            if length:
                lines.append(f"Q contain {rng.randint(1, length)}")
    lines.append("Q lzlength")
    return "\n".join(lines) + "\n"
