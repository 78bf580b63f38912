import random
from itertools import combinations

import pytest

from lexsweep import Graph


def all_pairs(n):
    return list(combinations(range(n), 2))


def graph_from_mask(n, mask):
    pairs = all_pairs(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])


def all_graphs(n):
    """Every labeled graph on n vertices."""
    total = 1 << (n * (n - 1) // 2)
    for mask in range(total):
        yield graph_from_mask(n, mask)


def random_graph(n, p, rng):
    return Graph(n, [(i, j) for i, j in all_pairs(n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def path(k):
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k):
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k):
    return Graph(k, all_pairs(k))
