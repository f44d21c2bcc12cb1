from __future__ import annotations

import itertools
import random

import pytest

from matchint.graph import Graph, new_graph
from matchint.search import generate_small_graphs


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    """Every isomorphism class on 1..7 vertices."""
    return [g for n in range(1, 8) for g in generate_small_graphs(n)]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(1729)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return new_graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def brute_matching_counts(g: Graph) -> list[int]:
    """m(G, r) by testing every r-subset of edges for vertex-disjointness."""
    edges = g.edges()
    counts = [1]
    for r in range(1, g.n // 2 + 1):
        c = 0
        for combo in itertools.combinations(edges, r):
            verts = [v for e in combo for v in e]
            if len(set(verts)) == 2 * r:
                c += 1
        counts.append(c)
    return counts


def K(n: int) -> Graph:
    return new_graph(n, itertools.combinations(range(n), 2))


def star(leaves: int) -> Graph:
    return new_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])
