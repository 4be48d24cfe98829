import random

import pytest


def make_symbols(rng: random.Random, n: int, alphabet: int) -> list[int]:
    return [rng.randrange(alphabet) + 97 for _ in range(n)]


def random_edit(rng: random.Random, n: int, alphabet: int, edge_bias=0.0):
    from dynlz import EditKind, EditOp
    kinds = []
    if n > 0:
        kinds += [EditKind.DELETE, EditKind.SUBSTITUTE, EditKind.SUBSTITUTE]
    kinds += [EditKind.INSERT, EditKind.INSERT]
    kind = rng.choice(kinds)
    hi = n + 1 if kind is EditKind.INSERT else n
    if edge_bias and rng.random() < edge_bias and hi > 1:
        m = max(1, round(hi ** (1 / 3))) + 1
        pos = rng.choice([rng.randint(1, min(m, hi)),
                          rng.randint(max(1, hi - m), hi)])
    else:
        pos = rng.randint(1, hi)
    sym = rng.randrange(alphabet) + 97 if kind is not EditKind.DELETE else None
    return EditOp(kind, pos, sym)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
