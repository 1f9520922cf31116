import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capcolor import (
    Graph,
    are_anticomplete,
    build_blowup,
    canonical_form,
    cycle_blowup,
    exact_chromatic,
    has_clique_cutset,
    induced_subgraph,
    max_clique_size,
    max_stable_set_size,
    true_twin_classes,
)
from capcolor.oracles import (
    CLIQUE_CUTSET_CAP,
    NotComputedError,
    chromatic_lower_bound,
    is_proper_coloring,
    tabu_coloring,
)

from conftest import brute_chromatic, random_graph, to_nx


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


# -- Graph value -------------------------------------------------------------


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # self-loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])


def test_graph_basics():
    c5 = Graph.cycle(5)
    assert c5.m == 5 and c5.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert c5.is_connected() and not Graph.empty(2).is_connected()
    assert Graph.complete(4).complement().m == 0
    assert Graph.from_adjacency_lists(c5.adjacency_lists()) == c5


def test_induced_subgraph_examples():
    c5 = Graph.cycle(5)
    same, ids = induced_subgraph(c5, range(5))
    assert same == c5 and ids == (0, 1, 2, 3, 4)
    p3, ids = induced_subgraph(c5, {0, 1, 2})
    assert p3 == Graph.path(3) and ids == (0, 1, 2)
    empty, ids = induced_subgraph(Graph.complete(4), set())
    assert empty.n == 0 and ids == ()


def test_induced_subgraph_out_of_range():
    with pytest.raises(ValueError):
        induced_subgraph(Graph.cycle(5), [0, 7])


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_induced_subgraph_monotone(g):
    keep = [v for v in range(g.n) if v % 2 == 0]
    sub, ids = induced_subgraph(g, keep)
    for a in range(sub.n):
        for b in range(sub.n):
            assert sub.has_edge(a, b) == g.has_edge(ids[a], ids[b])
    assert max_clique_size(sub).value <= max_clique_size(g).value


# -- exact oracles -----------------------------------------------------------


@pytest.mark.parametrize(
    "g, omega",
    [(Graph.complete(4), 4), (Graph.cycle(5), 2), (cycle_blowup(5, 2)[0], 4)],
)
def test_max_clique_examples(g, omega):
    res = max_clique_size(g)
    assert res.value == omega and g.is_clique(res.witness) and len(res.witness) == omega


@pytest.mark.parametrize(
    "g, alpha",
    # alpha of C7^3 = 3 was frozen from a networkx clique search on the complement
    [(Graph.complete(4), 1), (cycle_blowup(5, 2)[0], 2), (cycle_blowup(7, 3)[0], 3)],
)
def test_max_stable_set_examples(g, alpha):
    res = max_stable_set_size(g)
    assert res.value == alpha and g.is_stable(res.witness) and len(res.witness) == alpha


@pytest.mark.parametrize(
    "g, chi",
    [(Graph.cycle(5), 3), (cycle_blowup(5, 2)[0], 5), (cycle_blowup(7, 3)[0], 7), (Graph.empty(0), 0)],
)
def test_exact_chromatic_examples(g, chi):
    res = exact_chromatic(g)
    assert res.value == chi
    assert is_proper_coloring(g, res.witness) and set(res.witness) == set(range(1, chi + 1))


@given(graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_oracle_witnesses_replay(g):
    w = max_clique_size(g)
    a = max_stable_set_size(g)
    assert g.is_clique(w.witness) and len(w.witness) == w.value
    assert g.is_stable(a.witness) and len(a.witness) == a.value
    chi = exact_chromatic(g).value
    assert chi >= w.value
    if g.n:
        assert chi >= -(-g.n // a.value)


def test_oracles_against_networkx():
    rng = random.Random(11)
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 12))
        h = to_nx(g)
        assert max_clique_size(g).value == max(len(c) for c in nx.find_cliques(h))
        assert max_stable_set_size(g).value == max(len(c) for c in nx.find_cliques(nx.complement(h)))


def test_exact_chromatic_matches_enumeration():
    rng = random.Random(5)
    for _ in range(250):
        g = random_graph(rng, rng.randint(0, 8))
        assert exact_chromatic(g).value == brute_chromatic(g)


@pytest.mark.parametrize("hint", [None, 3, 5, 8, 20])
def test_upper_hint_never_changes_value(hint):
    g, _ = cycle_blowup(7, 2)
    assert exact_chromatic(g, upper_hint=hint).value == 5


def test_lower_bound_is_tight_on_cycle_blowups():
    g, _ = cycle_blowup(5, 3)
    assert chromatic_lower_bound(g) == 8 == exact_chromatic(g).value


def test_tabu_is_deterministic_and_sound():
    g, _ = cycle_blowup(7, 3)
    a, b = tabu_coloring(g, 7, seed=4), tabu_coloring(g, 7, seed=4)
    assert a == b and is_proper_coloring(g, a) and max(a) <= 7
    # 6 colors are impossible, so the search can only give up
    assert tabu_coloring(g, 6, max_iters=500) is None


# -- twins, cutsets, canonical form -----------------------------------------


def test_true_twin_examples():
    g, _ = cycle_blowup(5, 3)
    assert true_twin_classes(g) == [(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11), (12, 13, 14)]
    assert true_twin_classes(Graph.cycle(5)) == [(v,) for v in range(5)]
    assert true_twin_classes(Graph.complete(6)) == [tuple(range(6))]


@given(graphs(max_n=12))
@settings(max_examples=60, deadline=None)
def test_twin_contraction_reexpands_isomorphic(g):
    classes = true_twin_classes(g)
    assert sorted(v for c in classes for v in c) == list(range(g.n))
    assert all(g.is_clique(c) for c in classes)
    index = {v: i for i, c in enumerate(classes) for v in c}
    quotient = Graph.from_edges(len(classes), {tuple(sorted((index[u], index[v]))) for u, v in g.edges() if index[u] != index[v]})
    again, _ = build_blowup(quotient, [len(c) for c in classes])
    assert canonical_form(again) == canonical_form(g)
    assert nx.is_isomorphic(to_nx(again), to_nx(g))


def test_canonical_form_agrees_with_networkx():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 8)
        g = random_graph(rng, n)
        h = random_graph(rng, n, p=g.m / max(1, n * (n - 1) // 2))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_clique_cutset_examples():
    assert has_clique_cutset(Graph.path(3)) == (1,)
    assert has_clique_cutset(Graph.cycle(5)) is None
    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert has_clique_cutset(diamond) == (1, 2)


def test_clique_cutset_witness_disconnects():
    rng = random.Random(23)
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 9))
        k = has_clique_cutset(g)
        if k is None:
            continue
        rest = [v for v in range(g.n) if v not in k]
        assert g.is_clique(k)
        assert len(induced_subgraph(g, rest)[0].components()) > len(g.components())


def test_clique_cutset_cap():
    with pytest.raises(NotComputedError):
        has_clique_cutset(Graph.cycle(CLIQUE_CUTSET_CAP + 1))


def test_are_anticomplete():
    c5 = Graph.cycle(5)
    assert are_anticomplete(c5, {0}, {2})
    assert not are_anticomplete(c5, {0}, {1})
    assert are_anticomplete(c5, set(), {0, 1, 2})
    with pytest.raises(ValueError):
        are_anticomplete(c5, {0, 1}, {1})
