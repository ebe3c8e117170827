"""Immutable undirected simple graphs on vertices ``0..n-1``.

Adjacency is kept twice: as frozensets for readable set algebra and as
integer bitmasks for the hot loops in the detectors and oracles.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional

from .errors import GraphError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected simple graph; vertices are ``0..n-1``.

    Duplicate edges collapse; self-loops and out-of-range endpoints raise
    :class:`GraphError` naming the offending pair.
    """

    __slots__ = ("n", "adj", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop {(u, v)}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in nbrs)
        self.masks = tuple(to_mask(s) for s in nbrs)
        self._edges = None

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]
        return list(self._edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> range:
        return range(self.n)

    def complement(self) -> "Graph":
        return Graph(self.n, [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                              if v not in self.adj[u]])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph(n, edges)


def _check_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    return s


def is_complete_to(g: Graph, u, s: Iterable[int]) -> bool:
    """True iff every vertex of ``u`` is adjacent to every vertex of ``s``.

    ``u`` may be a single vertex or a set of vertices (the set-to-set form).
    """
    us = _check_set(g, [u] if isinstance(u, int) else u)
    s = _check_set(g, s)
    if us & s:
        raise GraphError(f"vertices {sorted(us & s)} lie on both sides")
    return all(s <= g.adj[a] for a in us)


def is_anticomplete_to(g: Graph, u, s: Iterable[int]) -> bool:
    us = _check_set(g, [u] if isinstance(u, int) else u)
    s = _check_set(g, s)
    if us & s:
        raise GraphError(f"vertices {sorted(us & s)} lie on both sides")
    return all(not (s & g.adj[a]) for a in us)


def is_stable_set(g: Graph, s: Iterable[int]) -> bool:
    s = _check_set(g, s)
    return all(not (g.adj[v] & s) for v in s)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    s = _check_set(g, s)
    return all(s - {v} <= g.adj[v] for v in s)


def first_edge_inside(g: Graph, s: Iterable[int]) -> Optional[tuple[int, int]]:
    """Least edge ``(u, v)`` with both ends in ``s``, or None."""
    s = _check_set(g, s)
    for u in sorted(s):
        hit = [v for v in g.adj[u] & s if v > u]
        if hit:
            return (u, min(hit))
    return None


def first_edge_between(g: Graph, a: Iterable[int], b: Iterable[int]) -> Optional[tuple[int, int]]:
    a, b = frozenset(a), frozenset(b)
    for u in sorted(a):
        hit = g.adj[u] & b
        if hit:
            return (u, min(hit))
    return None


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``(g[s], map)`` where ``map`` sends ``s`` (ascending) onto ``0..|s|-1``."""
    order = sorted(_check_set(g, s))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u in order for v in g.adj[u] if v in index and u < v]
    return Graph(len(order), edges), index


def connected_components(g: Graph, within: Optional[Iterable[int]] = None) -> list[frozenset[int]]:
    """Components of ``g`` (or of ``g[within]``), ordered by least member."""
    allowed = set(range(g.n)) if within is None else set(_check_set(g, within))
    seen: set[int] = set()
    comps = []
    for root in sorted(allowed):
        if root in seen:
            continue
        comp = {root}
        queue = deque([root])
        seen.add(root)
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def bipartition(g: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """Two-coloring by BFS from the least vertex of each component.

    The least vertex of every component goes to the first side. Returns None
    when ``g`` has an odd cycle.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adj[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return (frozenset(v for v in range(g.n) if side[v] == 0),
            frozenset(v for v in range(g.n) if side[v] == 1))


# small named graphs used throughout tests, docs and generators

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    part = []
    for p, size in enumerate(sizes):
        part.extend([p] * size)
    n = len(part)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]])


def five_ring(sizes: Iterable[int]) -> Graph:
    """Blow-up of C5: part ``i`` is complete to parts ``i +- 1`` and stable."""
    sizes = list(sizes)
    if len(sizes) != 5 or min(sizes) < 1:
        raise GraphError(f"a 5-ring needs five non-empty parts, got {sizes}")
    part = []
    for p, size in enumerate(sizes):
        part.extend([p] * size)
    n = len(part)
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if (part[u] - part[v]) % 5 in (1, 4)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, edges)


def add_vertex(g: Graph, nbrs: Iterable[int]) -> Graph:
    """Return ``g`` plus a new vertex ``g.n`` adjacent to ``nbrs``."""
    return Graph(g.n + 1, g.edges + [(v, g.n) for v in nbrs])


def t5_wheel() -> Graph:
    """C5 0-1-2-3-4 plus apex 5 adjacent to 0, 1, 4."""
    return add_vertex(cycle_graph(5), [0, 1, 4])


def y5_wheel() -> Graph:
    """C5 0-1-2-3-4 plus apex 5 adjacent to 0, 1, 3."""
    return add_vertex(cycle_graph(5), [0, 1, 3])


def hvn_graph() -> Graph:
    """K4 on 0..3 plus vertex 4 adjacent to 0 and 1."""
    return add_vertex(complete_graph(4), [0, 1])


def paw_graph() -> Graph:
    """Triangle 0-1-2 plus pendant 3 on vertex 0."""
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
