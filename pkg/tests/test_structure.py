import json
import random

import networkx as nx
import pytest

from capcolor import (
    EarAdditionStep,
    Graph,
    apply_ear_addition,
    canonical_form,
    classify,
    enumerate_holes,
    find_triangle,
    find_wheel,
    generate_skeleton_corpus,
    has_cap,
    has_even_hole,
    validate_good_ear,
)
from capcolor.structure import (
    CorpusEntry,
    EarAdditionError,
    apply_ear_additions,
    find_hole_of_length,
    is_hole,
)

from conftest import brute_wheel, random_graph, to_nx

PETERSEN = Graph.from_edges(10, list(nx.petersen_graph().edges()))
HOUSE_CAP = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
C7 = Graph.cycle(7)
C7_HOLE = tuple(range(7))
# smallest good ear on C7 found by exhaustive search over ears of 1..7 internal
# vertices and all y-neighbor subsets, each candidate also checked for the class
C7_STEP = EarAdditionStep(C7_HOLE, 0, 1, 2, 5, (2,))


def test_find_triangle_examples():
    assert find_triangle(Graph.complete(3)) == (0, 1, 2)
    assert find_triangle(Graph.cycle(5)) is None
    house = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 2), (4, 3)])
    assert set(find_triangle(house)) == {2, 3, 4}


def test_enumerate_holes_examples():
    assert enumerate_holes(Graph.cycle(6), 6) == [(0, 1, 2, 3, 4, 5)]
    assert enumerate_holes(Graph.complete(4), 4) == []
    with pytest.raises(ValueError):
        enumerate_holes(Graph.cycle(5), 3)


def test_petersen_hole_counts():
    # 12 five-holes and 10 six-holes, frozen from networkx.simple_cycles filtered to induced cycles
    holes = enumerate_holes(PETERSEN, 6)
    assert sum(len(h) == 5 for h in holes) == 12
    assert sum(len(h) == 6 for h in holes) == 10
    assert all(is_hole(PETERSEN, h) for h in holes)
    assert len({frozenset(h) for h in holes}) == len(holes)


def test_holes_match_networkx_cycles():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng, rng.randint(4, 9), p=0.35)
        h = to_nx(g)
        expected = {
            frozenset(c) for c in nx.simple_cycles(h)
            if len(c) >= 4 and h.subgraph(c).number_of_edges() == len(c)
        }
        assert {frozenset(c) for c in enumerate_holes(g, g.n)} == expected


def test_has_even_hole_examples():
    assert len(has_even_hole(Graph.cycle(4))) == 4
    assert has_even_hole(C7) is None
    w = has_even_hole(PETERSEN)
    assert len(w) == 6 and is_hole(PETERSEN, w)


def test_has_cap_examples():
    hole, apex = has_cap(HOUSE_CAP)
    assert apex == 4 and sorted(hole) == [0, 1, 2, 3]
    assert has_cap(Graph.cycle(6)) is None
    c5_cap = Graph.from_edges(6, Graph.cycle(5).edges() + [(5, 0), (5, 1)])
    hole, apex = has_cap(c5_cap)
    assert apex == 5 and len(hole) == 5


def test_classify_examples():
    r = classify(Graph.cycle(5))
    assert r.triangle_free and r.cap_free and r.even_hole_free and not r.five_hole_free
    assert r.witnesses["five_hole"] == (0, 1, 2, 3, 4)
    r = classify(C7)
    assert r.triangle_free and r.cap_free and r.even_hole_free and r.five_hole_free
    cube = Graph.from_edges(8, list(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)).edges()))
    r = classify(cube)
    assert r.is_cube and not r.even_hole_free
    assert json.loads(json.dumps(r.to_json()))["is_cube"] is True


def test_find_wheel_examples():
    w5 = Graph.from_edges(6, Graph.cycle(5).edges() + [(5, v) for v in range(5)])
    hole, center = find_wheel(w5)
    assert center == 5 and sorted(hole) == [0, 1, 2, 3, 4]
    assert find_wheel(Graph.cycle(5)) is None
    c6 = Graph.from_edges(7, Graph.cycle(6).edges() + [(6, 0), (6, 2), (6, 4)])
    hole, center = find_wheel(c6)
    assert center == 6 and len(hole) == 6


def test_find_wheel_constraints():
    w5 = Graph.from_edges(6, Graph.cycle(5).edges() + [(5, v) for v in range(5)])
    assert find_wheel(w5, hole_contains=(0, 1, 2), center_adjacent_to=(1,)) is not None
    assert find_wheel(w5, center=0) is None
    with pytest.raises(ValueError):
        find_wheel(w5, hole_contains=(9,))


def test_find_wheel_matches_enumeration():
    rng = random.Random(9)
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 8))
        assert (find_wheel(g) is not None) == brute_wheel(g)


# -- good ears ---------------------------------------------------------------


def test_valid_step_on_c7():
    assert validate_good_ear(C7, C7_STEP)
    g = apply_ear_addition(C7, C7_STEP)
    assert g.n == 12
    r = classify(g)
    assert r.triangle_free and r.even_hole_free
    odd = [h for h in enumerate_holes(g, g.n) if len(h) % 2]
    ear = set(range(7, 12))
    # the long hole around the ear plus two 5-holes through y and part of the ear
    assert sorted(len(h) for h in odd if ear & set(h)) == [5, 5, 11]


def test_parity_violation():
    step = EarAdditionStep(C7_HOLE, 0, 1, 2, 5, ())
    verdict = validate_good_ear(C7, step)
    assert not verdict and "parity" in verdict.violations


def test_flipping_one_position_flips_parity():
    for c in range(3, 8):
        for base in [(), (1,), (0, 2)]:
            if any(p >= c for p in base):
                continue
            for flip in range(c):
                other = tuple(sorted(set(base) ^ {flip}))
                a = "parity" in validate_good_ear(C7, EarAdditionStep(C7_HOLE, 0, 1, 2, c, base)).violations
                b = "parity" in validate_good_ear(C7, EarAdditionStep(C7_HOLE, 0, 1, 2, c, other)).violations
                assert a != b


def test_non_induced_new_cycle():
    # C6 with chord 2-5 is not a hole; the cycle around it keeps the chord
    g = Graph.from_edges(6, Graph.cycle(6).edges() + [(2, 5)])
    step = EarAdditionStep(tuple(range(6)), 0, 1, 2, 3, (1,))
    verdict = validate_good_ear(g, step)
    assert not verdict and "new_cycle_not_induced" in verdict.violations


def test_wheel_violation():
    # a vertex seeing x, y and z makes a wheel through xyz centred next to y
    g = Graph.from_edges(8, C7.edges() + [(7, 0), (7, 1), (7, 2)])
    step = EarAdditionStep(C7_HOLE, 0, 1, 2, 5, (2,))
    verdict = validate_good_ear(g, step)
    assert not verdict and "wheel_through_xyz" in verdict.violations


def test_malformed_step_raises():
    with pytest.raises(ValueError):
        validate_good_ear(C7, EarAdditionStep(C7_HOLE, 0, 1, 3, 5, (2,)))
    with pytest.raises(ValueError):
        validate_good_ear(C7, EarAdditionStep(C7_HOLE, 0, 1, 2, 5, (9,)))


def test_invalid_step_rejected():
    with pytest.raises(EarAdditionError) as err:
        apply_ear_addition(C7, EarAdditionStep(C7_HOLE, 0, 1, 2, 5, ()))
    assert "parity" in err.value.violations


def test_even_hole_result_rejected():
    # valid by the ear bullets but y next to the second internal vertex closes a 4-hole
    step = EarAdditionStep(C7_HOLE, 0, 1, 2, 5, (1,))
    with pytest.raises(EarAdditionError):
        apply_ear_addition(C7, step)


def test_zero_steps_is_identity():
    assert apply_ear_additions(C7, []) == C7


def test_step_json_round_trip():
    assert EarAdditionStep.from_json(json.loads(json.dumps(C7_STEP.to_json()))) == C7_STEP


# -- corpus ------------------------------------------------------------------


def test_corpus_without_steps_is_odd_holes():
    corpus = generate_skeleton_corpus(0, 18, 0)
    assert [e.graph for e in corpus] == [Graph.cycle(5), Graph.cycle(7), Graph.cycle(9)]


def test_corpus_size_and_class(corpus):
    assert len(corpus) >= 20
    keys = {canonical_form(e.graph) for e in corpus}
    assert len(keys) == len(corpus)
    assert any(e.steps for e in corpus)
    for e in corpus:
        assert 5 <= e.graph.n <= 18
        r = classify(e.graph)
        assert r.triangle_free and r.even_hole_free


def test_corpus_replays_and_is_deterministic(corpus):
    again = generate_skeleton_corpus(1, 18, 3)
    assert [e.to_json() for e in again] == [e.to_json() for e in corpus]
    for e in corpus:
        assert e.replay() == e.graph
        assert CorpusEntry.from_json(json.loads(json.dumps(e.to_json()))) == e


def test_five_hole_free_corpus(five_hole_free_corpus):
    assert len(five_hole_free_corpus) >= 10
    for e in five_hole_free_corpus:
        assert find_hole_of_length(e.graph, 5) is None
        assert find_triangle(e.graph) is None and has_even_hole(e.graph) is None


def test_corpus_rejects_tiny_max_vertices():
    with pytest.raises(ValueError):
        generate_skeleton_corpus(0, 4, 1)
