"""Shared fixtures and brute-force oracles that do not touch the solvers under test."""

import itertools
import random

import networkx as nx
import pytest

from capcolor import Graph, generate_skeleton_corpus

# seeds recorded when the corpus sizes below were first measured
CORPUS_SEED = 1
FIVE_HOLE_FREE_SEED = 3


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng, n, p=None):
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_chromatic(g):
    """Smallest k admitting a proper coloring, by plain exhaustive backtracking."""
    earlier = [[u for u in g.neighbors(v) if u < v] for v in range(g.n)]

    def fits(k, col, v):
        if v == g.n:
            return True
        for c in range(k):
            if all(col[u] != c for u in earlier[v]):
                col[v] = c
                if fits(k, col, v + 1):
                    return True
        return False

    return next(k for k in range(g.n + 1) if fits(k, [0] * g.n, 0))


def _subsets(n, min_size=0):
    for size in range(min_size, n + 1):
        yield from itertools.combinations(range(n), size)


def _induces_cycle(g, s):
    if len(s) < 4:
        return False
    ss = set(s)
    if any(len(ss & set(g.neighbors(v))) != 2 for v in s):
        return False
    # 2-regular and connected means one cycle
    seen, stack = {s[0]}, [s[0]]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u in ss and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(s)


def brute_triangle(g):
    return any(g.is_clique(t) for t in itertools.combinations(range(g.n), 3))


def brute_even_hole(g):
    return any(len(s) % 2 == 0 and _induces_cycle(g, s) for s in _subsets(g.n, 4))


def brute_cap(g):
    for s in _subsets(g.n, 5):
        for v in s:
            rest = tuple(u for u in s if u != v)
            on = [u for u in rest if g.has_edge(u, v)]
            if len(on) == 2 and g.has_edge(*on) and _induces_cycle(g, rest):
                return True
    return False


def brute_wheel(g):
    for s in _subsets(g.n, 4):
        if _induces_cycle(g, s):
            for v in set(range(g.n)) - set(s):
                if sum(g.has_edge(v, u) for u in s) >= 3:
                    return True
    return False


@pytest.fixture(scope="session")
def corpus():
    return generate_skeleton_corpus(CORPUS_SEED, 18, 3)


@pytest.fixture(scope="session")
def five_hole_free_corpus():
    return generate_skeleton_corpus(FIVE_HOLE_FREE_SEED, 24, 3, min_hole=7, initial_lengths=(7, 9, 11, 13))


@pytest.fixture
def rng():
    return random.Random(20240601)
