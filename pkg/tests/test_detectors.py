import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from pentachrome.detectors import (C5, HVN, P5, PATTERNS, PAW, T5WHEEL, Y5WHEEL, Witness,
                                   brute_force_contains, check_class, find_induced,
                                   find_induced_through, pattern_graph, verify_witness)
from pentachrome.errors import CapExceeded
from pentachrome.graph import (Graph, complete_graph, cycle_graph, five_ring, hvn_graph,
                               induced_subgraph, path_graph, petersen_graph, t5_wheel, y5_wheel)


def test_find_induced_examples():
    assert find_induced(path_graph(5), P5) == Witness(P5, (0, 1, 2, 3, 4))
    assert find_induced(cycle_graph(5), P5) is None
    assert find_induced(hvn_graph(), HVN) == Witness(HVN, (0, 1, 2, 3, 4))
    assert find_induced(complete_graph(5), HVN) is None
    assert find_induced(t5_wheel(), P5) is None


def test_witness_role_orders():
    w = find_induced(t5_wheel(), T5WHEEL)
    assert w.vertices == (0, 1, 2, 3, 4, 5)
    w = find_induced(y5_wheel(), Y5WHEEL)
    assert verify_witness(y5_wheel(), w)
    assert find_induced(t5_wheel(), Y5WHEEL) is None
    assert find_induced(y5_wheel(), T5WHEEL) is None


def test_check_class_examples():
    r = check_class(cycle_graph(5))
    assert r.p5_free and r.hvn_free and r.in_class
    r = check_class(path_graph(5))
    assert r.p5_free is False and verify_witness(path_graph(5), r.witnesses[P5])
    r = check_class(five_ring([2, 2, 2, 2, 2]))
    assert r.in_class


def test_brute_force_examples():
    assert brute_force_contains(cycle_graph(5), path_graph(4)) is not None
    assert brute_force_contains(complete_graph(4), cycle_graph(5)) is None
    assert brute_force_contains(petersen_graph(), cycle_graph(5)) == (0, 1, 2, 3, 4)
    with pytest.raises(CapExceeded):
        brute_force_contains(Graph(13), path_graph(2))
    with pytest.raises(CapExceeded):
        brute_force_contains(Graph(5), path_graph(9))


# frozen from brute_force_contains: brute-force answers on the fixed named graphs
FROZEN = {
    ("petersen", C5): (0, 1, 2, 3, 4),
    ("petersen", P5): (0, 1, 2, 3, 8),
    ("petersen", HVN): None,
    ("ring22222", P5): None,
    ("ring22222", C5): (0, 2, 4, 6, 8),
    ("t5", PAW): (1, 0, 5, 2),
    ("y5", PAW): (0, 1, 5, 4),
}


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_witnesses(key):
    g = {"petersen": petersen_graph(), "ring22222": five_ring([2] * 5),
         "t5": t5_wheel(), "y5": y5_wheel()}[key[0]]
    w = find_induced(g, key[1])
    assert (w.vertices if w else None) == FROZEN[key]
    assert brute_force_contains(g, pattern_graph(key[1])) == FROZEN[key]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_agrees_with_brute_force(g):
    for tag in PATTERNS:
        w = find_induced(g, tag)
        ref = brute_force_contains(g, pattern_graph(tag))
        assert (w.vertices if w else None) == ref
        if w is not None:
            assert verify_witness(g, w)
            sub, _ = induced_subgraph(g, w.vertices)
            assert sub.m == pattern_graph(tag).m


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=8))
def test_find_through_matches_subset_search(g):
    for tag in (P5, C5, HVN):
        v = g.n - 1
        w = find_induced_through(g, tag, v)
        found = None
        for tup in itertools.permutations(range(g.n), pattern_graph(tag).n):
            if v in tup and verify_witness(g, Witness(tag, tup)):
                found = tup
                break
        assert (w.vertices if w else None) == found


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_deterministic(g):
    again = Graph(g.n, list(reversed(g.edges)))
    for tag in PATTERNS:
        assert find_induced(g, tag) == find_induced(again, tag)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=9))
def test_p5_free_graphs_have_no_long_induced_cycles(g):
    if find_induced(g, P5) is not None:
        return
    for k in range(6, min(g.n, 8) + 1):
        assert brute_force_contains(g, cycle_graph(k)) is None
