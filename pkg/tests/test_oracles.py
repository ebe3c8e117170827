import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, naive_chi, naive_omega, random_graph
from pentachrome.errors import CapExceeded, HintInfeasible
from pentachrome.graph import (Graph, complete_graph, complete_multipartite, cycle_graph,
                               hvn_graph, is_clique)
from pentachrome.oracles import (ASCENDING, DEGENERACY, chromatic_number_exact, greedy_coloring,
                                 max_clique)


def test_max_clique_examples():
    assert max_clique(complete_graph(4)).size == 4
    assert max_clique(cycle_graph(5)).size == 2
    assert max_clique(hvn_graph()).witness == (0, 1, 2, 3)


def test_chi_examples():
    assert chromatic_number_exact(cycle_graph(5)).chi == 3
    assert chromatic_number_exact(complete_multipartite([3, 3])).chi == 2
    anti = cycle_graph(7).complement()
    assert chromatic_number_exact(anti).chi == naive_chi(anti) == 4


def test_greedy_examples():
    assert max(greedy_coloring(complete_graph(4), ASCENDING)) == 4
    assert greedy_coloring(cycle_graph(5), ASCENDING) == (1, 2, 1, 2, 3)
    assert set(greedy_coloring(Graph(6), DEGENERACY)) == {1}


def test_hint_below_chi_is_reported():
    with pytest.raises(HintInfeasible):
        chromatic_number_exact(cycle_graph(5), upper_hint=2)
    assert chromatic_number_exact(cycle_graph(5), upper_hint=3).chi == 3


def test_caps(monkeypatch):
    with pytest.raises(CapExceeded):
        chromatic_number_exact(Graph(70))
    monkeypatch.setenv("PENTACHROME_MAX_N", "5")
    with pytest.raises(CapExceeded):
        max_clique(Graph(6))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_against_naive(g):
    clique = max_clique(g)
    assert clique.size == naive_omega(g)
    assert is_clique(g, clique.witness) and len(clique.witness) == clique.size
    res = chromatic_number_exact(g)
    assert res.chi == naive_chi(g)
    assert all(res.coloring[u] != res.coloring[v] for u, v in g.edges)
    assert len(set(res.coloring)) == res.chi or g.n == 0
    assert clique.size <= res.chi <= max(greedy_coloring(g, DEGENERACY), default=0)
    assert res.chi <= max(greedy_coloring(g, ASCENDING), default=0)


def test_against_networkx_medium():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(10, 45)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        ref = nx.Graph()
        ref.add_nodes_from(range(n))
        ref.add_edges_from(g.edges)
        assert max_clique(g).size == max(len(c) for c in nx.find_cliques(ref))
        res = chromatic_number_exact(g) if n <= 30 else None
        if res is not None:
            assert all(res.coloring[u] != res.coloring[v] for u, v in g.edges)
            assert res.chi <= max(nx.greedy_color(ref, "largest_first").values()) + 1


def test_clique_deterministic():
    rng = random.Random(5)
    g = random_graph(rng, 30, 0.5)
    assert max_clique(g) == max_clique(Graph(g.n, reversed(g.edges)))
