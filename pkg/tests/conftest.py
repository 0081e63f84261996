"""Shared builders and strategies for the test suite.

Random graphs are drawn through a seeded ``random.Random`` inside the
hypothesis composite so failures shrink on (n, p, seed) rather than on raw
edge lists; that is coarse but reproducible.
"""

import random

import pytest
from hypothesis import strategies as st

from zetakit.graph import Graph, build_graph
from zetakit.oracle import enumerate_small_graphs


# ---------------------------------------------------------------- builders

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def triangle_pendant() -> Graph:
    """Triangle 0-1-2 with a pendant 3 hanging off vertex 0."""
    return build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return build_graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform-ish attachment tree on n vertices (n >= 1)."""
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    return build_graph(n, edges)


def random_forest(n: int, seed: int) -> Graph:
    """Random forest: attachment tree with a fraction of edges dropped."""
    rng = random.Random(seed)
    edges = [(rng.randrange(i), i) for i in range(1, n) if rng.random() < 0.8]
    return build_graph(n, edges)


# ------------------------------------------------------------- strategies

@st.composite
def graphs(draw, min_n=1, max_n=16, ps=(0.1, 0.25, 0.5, 0.8)):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from(list(ps)))
    seed = draw(st.integers(0, 2**32 - 1))
    return gnp(n, p, seed)


@st.composite
def graphs_with_edges(draw, min_n=2, max_n=16):
    """Graphs guaranteed to contain at least one edge."""
    g = draw(graphs(min_n=min_n, max_n=max_n))
    if g.m == 0:
        u = draw(st.integers(0, g.n - 2))
        g = build_graph(g.n, list(g.edges()) + [(u, u + 1)])
    return g


# --------------------------------------------------------------- fixtures

@pytest.fixture(scope="session")
def dedup_suite():
    """Nonisomorphic graphs keyed by vertex count, n = 1..7."""
    return {n: list(enumerate_small_graphs(n, dedup=True)) for n in range(1, 8)}
