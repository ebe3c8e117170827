import random

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs, random_graph
from pentachrome.formats import (DIMACS_COL, EDGE_LIST, GRAPH6, FormatError, GraphDocument,
                                 detect_format, emit, emit_graph6, normalize_format, parse,
                                 parse_dimacs, parse_edge_list, parse_graph6, read_graph,
                                 write_graph)
from pentachrome.errors import GraphError
from pentachrome.graph import Graph, cycle_graph, petersen_graph


def test_graph6_known_strings():
    assert parse_graph6(b"Dhc") == cycle_graph(5)
    assert emit_graph6(cycle_graph(5)) == b"Dhc\n"
    assert parse_graph6(b">>graph6<<Dhc\n") == cycle_graph(5)
    assert parse_graph6(b"?") == Graph(0)


def test_edge_list_example():
    g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    assert g == cycle_graph(5)
    assert emit(g) == b"5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_dimacs_example():
    g = parse_dimacs("c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n")
    assert g == cycle_graph(5)
    # repeated edges make the problem-line count unreliable, so it is not enforced
    assert parse_dimacs("p edge 3 9\ne 1 2\ne 2 1\n").m == 1


@pytest.mark.parametrize("fmt,data,line", [
    (EDGE_LIST, "3 2\n0 1\n", 1),
    (EDGE_LIST, "3 1\n0 3\n", 2),
    (EDGE_LIST, "3 1\n1 1\n", 2),
    (EDGE_LIST, "3 x\n", 1),
    (DIMACS_COL, "e 1 2\n", 1),
    (DIMACS_COL, "p edge 3 1\ne 1 4\n", 2),
    (DIMACS_COL, "p edge 3 1\nq 1\n", 2),
])
def test_malformed_inputs_name_the_line(fmt, data, line):
    with pytest.raises(FormatError) as err:
        parse(data, fmt)
    assert err.value.line == line and f"line {line}" in str(err.value)


def test_graph6_errors():
    with pytest.raises(FormatError):
        parse_graph6(b"D")
    with pytest.raises(FormatError):
        parse_graph6(b"D\x20\x20")


def test_detect_format():
    assert detect_format(b"", "a.g6") == GRAPH6
    assert detect_format(b"", "a.col") == DIMACS_COL
    assert detect_format(b"p edge 2 0\n") == DIMACS_COL
    assert detect_format(b"Dhc\n") == GRAPH6
    assert detect_format(b"5 0\n") == EDGE_LIST
    assert normalize_format("g6") == GRAPH6 and normalize_format("auto") is None
    with pytest.raises(GraphError):
        normalize_format("xml")


@settings(max_examples=150)
@given(graphs(max_n=30))
def test_round_trip_all_formats(g):
    for fmt in (GRAPH6, DIMACS_COL, EDGE_LIST):
        assert parse(emit(GraphDocument(fmt, g)), fmt).graph == g
        assert parse(emit(GraphDocument(fmt, g))).graph == g


def test_graph6_matches_networkx():
    # sizes cross the 62-vertex boundary where the size prefix changes
    rng = random.Random(6)
    for n in list(range(0, 70)) + [200]:
        g = random_graph(rng, n, rng.random())
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges)
        assert emit_graph6(g) == nx.to_graph6_bytes(ref, header=False)
        assert parse_graph6(emit_graph6(g)) == g


def test_file_round_trip(tmp_path):
    g = petersen_graph()
    for name in ("p.g6", "p.col", "p.txt"):
        path = str(tmp_path / name)
        write_graph(path, g)
        doc = read_graph(path)
        assert doc.graph == g and doc.format == detect_format(b"", name)


@pytest.mark.parametrize("fmt", [GRAPH6, DIMACS_COL, EDGE_LIST])
def test_round_trip_1000_seeded(fmt):
    rng = random.Random(len(fmt))
    for _ in range(1000):
        g = random_graph(rng, rng.randint(0, 25), rng.random())
        doc = parse(emit(GraphDocument(fmt, g)))
        assert doc.graph == g and doc.format == fmt
