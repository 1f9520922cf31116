import json
import random

import pytest

from capcolor import (
    BlowupMap,
    Graph,
    blowup_omega,
    build_blowup,
    canonical_form,
    classify,
    cycle_blowup,
    max_clique_size,
    recognize_blowup,
)
from capcolor.blowup import fiber_order, restrict
from capcolor.graph import induced_subgraph

from conftest import random_graph


def test_build_blowup_examples():
    g, b = build_blowup(Graph.cycle(5), [1] * 5)
    assert g == Graph.cycle(5) and b.nonempty
    g, _ = build_blowup(Graph.cycle(5), [2] * 5)
    assert g.n == 10 and max_clique_size(g).value == 4
    g, _ = build_blowup(Graph.empty(1), [4])
    assert g == Graph.complete(4)


def test_fibers_are_contiguous_cliques():
    g, b = build_blowup(Graph.path(3), [2, 0, 3])
    assert b.fibers() == [[0, 1], [], [2, 3, 4]]
    assert not b.nonempty and g.m == 1 + 3
    assert fiber_order(b) == list(range(5))


def test_blowup_map_validation():
    with pytest.raises(ValueError):
        BlowupMap(Graph.path(2), (1,), (0,))
    with pytest.raises(ValueError):
        BlowupMap(Graph.path(2), (1, 1), (0, 0))
    with pytest.raises(ValueError):
        build_blowup(Graph.path(2), [1, -1])


def test_recognize_examples():
    b = recognize_blowup(cycle_blowup(5, 3)[0])
    assert b.skeleton == Graph.cycle(5) and b.multiplicity == (3,) * 5
    b = recognize_blowup(Graph.cycle(5))
    assert b.skeleton == Graph.cycle(5) and b.multiplicity == (1,) * 5
    b = recognize_blowup(Graph.complete(6))
    assert b.skeleton.n == 1 and b.multiplicity == (6,)


def test_recognize_relabels_to_build():
    rng = random.Random(2)
    for _ in range(50):
        sk = random_graph(rng, rng.randint(1, 6))
        g, _ = build_blowup(sk, [rng.randint(1, 3) for _ in range(sk.n)])
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        b = recognize_blowup(h)
        again, _ = build_blowup(b.skeleton, b.multiplicity)
        assert h.relabel(fiber_order(b)) == again
        assert b.total_graph() == h


def test_cycle_blowup_examples():
    g, _ = cycle_blowup(5, 1)
    assert g == Graph.cycle(5)
    g, b = cycle_blowup(5, 4)
    assert (g.n, blowup_omega(b)) == (20, 8)
    g, b = cycle_blowup(7, 3)
    assert (g.n, blowup_omega(b)) == (21, 6)
    for bad in (4, 3, 6):
        with pytest.raises(ValueError):
            cycle_blowup(bad, 1)


def test_blowup_omega_examples():
    assert blowup_omega(cycle_blowup(5, 2)[1]) == 4
    assert blowup_omega(build_blowup(Graph.path(2), [3, 3])[1]) == 6
    assert blowup_omega(build_blowup(Graph.empty(1), [5])[1]) == 5
    # a triangle in the skeleton falls back to the exact oracle
    assert blowup_omega(build_blowup(Graph.complete(3), [1, 2, 3])[1]) == 6


def test_blowup_omega_matches_oracle(corpus):
    rng = random.Random(8)
    for _ in range(60):
        sk = rng.choice(corpus).graph
        m = [rng.randint(0, 2) for _ in range(sk.n)]
        while sum(m) > 14:
            m[rng.randrange(sk.n)] = 0
        g, b = build_blowup(sk, m)
        assert blowup_omega(b) == max_clique_size(g).value


def test_zero_fibers_drop_out(corpus):
    rng = random.Random(4)
    for _ in range(30):
        sk = rng.choice(corpus).graph
        m = [rng.choice([0, 1, 2]) for _ in range(sk.n)]
        support = [v for v in range(sk.n) if m[v]]
        g, _ = build_blowup(sk, m)
        h, _ = build_blowup(induced_subgraph(sk, support)[0], [m[v] for v in support])
        assert g == h


def test_corpus_blowups_stay_in_class(corpus):
    rng = random.Random(6)
    for e in corpus:
        if e.graph.n > 10:
            continue
        m = [rng.randint(1, 2) for _ in range(e.graph.n)]
        while sum(m) > 12:
            m[m.index(max(m))] -= 1
        g, _ = build_blowup(e.graph, m)
        r = classify(g)
        assert r.cap_free and r.even_hole_free


def test_restrict_and_json():
    _, b = cycle_blowup(5, 2)
    r = restrict(b, [1, 0, 2, 0, 1])
    assert r.n == 4 and r.multiplicity == (1, 0, 2, 0, 1)
    assert BlowupMap.from_json(json.loads(json.dumps(b.to_json()))) == b


def test_recognize_build_canonical_round_trip():
    rng = random.Random(12)
    for _ in range(40):
        sk = random_graph(rng, rng.randint(1, 7))
        g, _ = build_blowup(sk, [rng.randint(0, 2) for _ in range(sk.n)])
        b = recognize_blowup(g)
        assert canonical_form(build_blowup(b.skeleton, b.multiplicity)[0]) == canonical_form(g)
