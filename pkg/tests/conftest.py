import random
from itertools import product

import pytest

from cyclestar.graph import Graph, build_cycle_star


def random_connected_graph(rng: random.Random, n: int, extra: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair with probability ``extra``."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = set()
    for i in range(1, n):
        u, v = verts[i], verts[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < extra:
                edges.add((u, v))
    edges = sorted(edges)
    rng.shuffle(edges)
    return Graph(n, tuple(edges))


def random_corpus(count: int, n_min: int = 2, n_max: int = 6, seed: int = 20261019):
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(n_min, n_max), rng.choice((0.1, 0.3, 0.6)))
            for _ in range(count)]


def small_cycle_stars(max_n: int = 7):
    """All cycle-stars with k >= 3, l >= 0 and k + l <= max_n."""
    return [(k, l) for k in range(3, max_n + 1) for l in range(0, max_n - k + 1)]


def naive_es(g: Graph) -> int:
    """Slow reference: smallest k with an irregular labeling, by itertools from k = 1."""
    k = 1
    while True:
        for lab in product(range(1, k + 1), repeat=g.num_vertices):
            w = [lab[u] + lab[v] for u, v in g.edges]
            if len(set(w)) == len(w):
                return k
        k += 1


@pytest.fixture
def cs31():
    return build_cycle_star((3, 1))


@pytest.fixture
def k2():
    return Graph(2, ((0, 1),))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
