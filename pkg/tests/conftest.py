"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import strategies as st

from pentachrome.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


def naive_omega(g: Graph) -> int:
    best = 0
    for k in range(1, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))
               for s in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def naive_chi(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if any(all(c[u] != c[v] for u, v in g.edges)
               for c in itertools.product(range(k), repeat=g.n)):
            return k
    return g.n


def proper_3_colorings(g: Graph) -> list[tuple[int, int]]:
    """Every proper 3-coloring as (mask of color 1, mask of color 2)."""
    out = []
    edges = g.edges
    for c in itertools.product((1, 2, 3), repeat=g.n):
        if all(c[u] != c[v] for u, v in edges):
            m1 = sum(1 << v for v in range(g.n) if c[v] == 1)
            m2 = sum(1 << v for v in range(g.n) if c[v] == 2)
            out.append((m1, m2))
    return out


def odd_cycle_exists(g: Graph) -> bool:
    """Exhaustive search for any (not necessarily induced) odd cycle."""
    for k in range(3, g.n + 1, 2):
        for s in itertools.permutations(range(g.n), k):
            if s[0] == min(s) and all(g.has_edge(s[i], s[(i + 1) % k]) for i in range(k)):
                return True
    return False


class Report:
    """Prints one line per acceptance criterion, visible with or without ``-s``."""

    def __init__(self, capsys):
        self.capsys = capsys

    def line(self, number: int, ok: bool, text: str):
        with self.capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")


@pytest.fixture
def report(capsys):
    return Report(capsys)


def _invariant(g: Graph):
    return (g.n, g.m, tuple(sorted(g.degree(v) for v in range(g.n))))


def p5_k3_free_graphs(max_n: int) -> list[Graph]:
    """All (P5, K3)-free graphs on 1..max_n vertices, one per isomorphism class.

    Built by vertex extension: a triangle-free graph on n vertices minus its
    last vertex is triangle-free, so every class appears as an extension of
    some smaller class by a stable neighbourhood. Duplicates are removed with
    an invariant bucket plus networkx isomorphism tests.
    """
    import networkx as nx

    from pentachrome.detectors import has_induced_p5
    from pentachrome.graph import add_vertex, is_stable_set

    def to_nx(g):
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        return h

    level = [Graph(1)]
    out = list(level)
    for n in range(2, max_n + 1):
        buckets: dict = {}
        nxt = []
        for g in level:
            for mask in range(1 << g.n):
                nbrs = [v for v in range(g.n) if mask >> v & 1]
                if not is_stable_set(g, nbrs):
                    continue
                h = add_vertex(g, nbrs)
                if has_induced_p5(h):
                    continue
                key = _invariant(h)
                hx = to_nx(h)
                if any(nx.is_isomorphic(hx, other) for other in buckets.get(key, [])):
                    continue
                buckets.setdefault(key, []).append(hx)
                nxt.append(h)
        level = nxt
        out.extend(level)
    return out


def valid_prescriptions(g: Graph):
    """Every (S, T) with S, T disjoint stable and each T-vertex adjacent to S, as bitmasks."""
    masks = g.masks
    stable = [m for m in range(1 << g.n)
              if all(not (masks[v] & m) for v in range(g.n) if m >> v & 1)]
    for s in stable:
        reach = 0
        for v in range(g.n):
            if s >> v & 1:
                reach |= masks[v]
        for t in stable:
            if t & s or (t & ~reach):
                continue
            if t and not s:
                continue
            yield s, t
