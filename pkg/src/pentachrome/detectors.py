"""Induced-pattern detection for the six fixed patterns the coloring needs.

Each pattern is described by the adjacency among its *roles* and by the
order in which roles appear in a witness tuple:

======== ============================================ =======================
tag      role order                                   adjacency
======== ============================================ =======================
P5       a, b, c, d, e                                path a-b-c-d-e
C5       v1..v5                                       cycle v1-v2-v3-v4-v5-v1
HVN      k1, k2, k3, k4, apex                         K4 on k1..k4, apex ~ k1, k2
PAW      t1, t2, t3, p                                triangle, p ~ t1
T5WHEEL  v1..v5, x                                    C5, x ~ v1, v2, v5
Y5WHEEL  v1..v5, x                                    C5, x ~ v1, v2, v4
======== ============================================ =======================

``find_induced`` returns the lexicographically least tuple (in role order)
whose mapping is an isomorphism onto the induced subgraph. The search
assigns roles left to right with candidate sets narrowed by bitmask
intersections, so the first complete tuple found is the least one. Symmetry
constraints such as ``v2 < v5`` for C5 only discard tuples that have a
smaller symmetric image, which keeps the least one reachable.

With n <= 5000 the search is O(n^k) in the worst case for a pattern on k
vertices but the neighbourhood narrowing makes absent-pattern scans on
desk-scale graphs cheap. P5 and HVN additionally get a quick existence test
that avoids the ordered scan when the graph is pattern-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Optional

from .errors import CapExceeded, GraphError
from .graph import Graph, bits

P5, HVN, PAW, C5, T5WHEEL, Y5WHEEL = "P5", "HVN", "PAW", "C5", "T5WHEEL", "Y5WHEEL"
PATTERNS = (P5, HVN, PAW, C5, T5WHEEL, Y5WHEEL)

_CYCLE = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]

# (size, role edges, symmetry constraints (i, j) meaning tuple[i] < tuple[j])
_PATTERN_TABLE = {
    P5: (5, [(0, 1), (1, 2), (2, 3), (3, 4)], [(0, 4)]),
    C5: (5, _CYCLE, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4)]),
    HVN: (5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)], [(0, 1), (2, 3)]),
    PAW: (4, [(0, 1), (0, 2), (1, 2), (0, 3)], [(1, 2)]),
    T5WHEEL: (6, _CYCLE + [(0, 5), (1, 5), (4, 5)], [(1, 4)]),
    Y5WHEEL: (6, _CYCLE + [(0, 5), (1, 5), (3, 5)], [(0, 1)]),
}

BRUTE_FORCE_MAX_PATTERN = 8
BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class Witness:
    """An ordered vertex tuple realising ``pattern`` under its role order."""

    pattern: str
    vertices: tuple[int, ...]

    def as_list(self) -> list[int]:
        return list(self.vertices)


@dataclass
class ClassReport:
    p5_free: Optional[bool]
    hvn_free: Optional[bool]
    witnesses: dict[str, Witness] = field(default_factory=dict)
    checked: dict[str, bool] = field(default_factory=dict)

    @property
    def in_class(self) -> bool:
        return bool(self.p5_free and self.hvn_free)

    def to_json(self) -> dict:
        return {"p5_free": self.p5_free, "hvn_free": self.hvn_free}


def pattern_graph(tag: str) -> Graph:
    size, edges, _ = _PATTERN_TABLE[tag]
    return Graph(size, edges)


def _role_adjacency(tag):
    size, edges, less = _PATTERN_TABLE[tag]
    adj = [[False] * size for _ in range(size)]
    for i, j in edges:
        adj[i][j] = adj[j][i] = True
    return size, adj, less


def _search(g: Graph, tag: str, forced: Optional[tuple[int, int]] = None) -> Optional[tuple[int, ...]]:
    """Ordered role-by-role DFS; ``forced=(role, vertex)`` pins one role."""
    size, adj, less = _role_adjacency(tag)
    masks = g.masks
    full = g.full_mask
    after = [[] for _ in range(size)]   # role r must exceed tuple[i]
    before = [[] for _ in range(size)]  # role r must be below tuple[j]
    for i, j in less:
        if i < j:
            after[j].append(i)
        else:
            before[i].append(j)

    pin_role, pin_vertex = forced if forced is not None else (-1, -1)
    # constraints that the pinned vertex imposes on roles placed before it
    pin_filter = [full] * size
    if forced is not None:
        for r in range(pin_role):
            m = masks[pin_vertex] if adj[pin_role][r] else (full & ~masks[pin_vertex])
            pin_filter[r] = m & ~(1 << pin_vertex)
            for i, j in less:
                if i == r and j == pin_role:
                    pin_filter[r] &= (1 << pin_vertex) - 1
                elif i == pin_role and j == r:
                    pin_filter[r] &= full & ~((1 << (pin_vertex + 1)) - 1)

    chosen = [0] * size

    def candidates(r, used):
        cand = full & ~used & pin_filter[r]
        for j in range(r):
            cand &= masks[chosen[j]] if adj[j][r] else ~masks[chosen[j]]
        for i in after[r]:
            cand &= ~((1 << (chosen[i] + 1)) - 1)
        for j in before[r]:
            cand &= (1 << chosen[j]) - 1
        if r == pin_role:
            cand &= 1 << pin_vertex
        return cand

    def extend(r, used):
        cand = candidates(r, used)
        if r == size - 1:
            if cand:
                chosen[r] = (cand & -cand).bit_length() - 1
                return True
            return False
        for v in bits(cand):
            chosen[r] = v
            if extend(r + 1, used | (1 << v)):
                return True
        return False

    if size and extend(0, 0):
        return tuple(chosen)
    return None


def has_induced_p5(g: Graph) -> bool:
    """Existence test for an induced P5, organised around the middle vertex."""
    masks = g.masks
    for c in range(g.n):
        nc = masks[c]
        outside_c = ~nc & ~(1 << c)
        for b in bits(nc):
            # d ranges over neighbours of c non-adjacent to b, d > b (unordered pair)
            for d in bits(nc & ~masks[b] & ~((1 << (b + 1)) - 1)):
                a_side = masks[b] & outside_c & ~masks[d]
                if not a_side:
                    continue
                e_side = masks[d] & outside_c & ~masks[b]
                if not e_side:
                    continue
                if a_side.bit_count() > e_side.bit_count():
                    a_side, e_side = e_side, a_side
                for a in bits(a_side):
                    if e_side & ~masks[a]:
                        return True
    return False


def has_induced_hvn(g: Graph) -> bool:
    """HVN exists iff some edge's common neighbourhood is not complete multipartite."""
    masks = g.masks
    for u in range(g.n):
        for v in bits(masks[u] & ~((1 << (u + 1)) - 1)):
            common = masks[u] & masks[v]
            rest = common
            while rest:
                a = (rest & -rest).bit_length() - 1
                part = common & ~masks[a]
                for b in bits(part):
                    if common & ~masks[b] != part:
                        return True
                rest &= ~part
    return False


def find_induced(g: Graph, pattern: str) -> Optional[Witness]:
    """Lexicographically least induced copy of ``pattern`` in ``g``, or None."""
    if pattern not in _PATTERN_TABLE:
        raise GraphError(f"unknown pattern {pattern!r}")
    if pattern == P5 and not has_induced_p5(g):
        return None
    if pattern == HVN and not has_induced_hvn(g):
        return None
    found = _search(g, pattern)
    return Witness(pattern, found) if found is not None else None


def find_induced_through(g: Graph, pattern: str, v: int) -> Optional[Witness]:
    """Least induced copy of ``pattern`` that uses vertex ``v`` in some role."""
    size = _PATTERN_TABLE[pattern][0]
    best = None
    for role in range(size):
        found = _search(g, pattern, forced=(role, v))
        if found is not None and (best is None or found < best):
            best = found
    return Witness(pattern, best) if best is not None else None


def verify_witness(g: Graph, w: Witness) -> bool:
    """True iff ``w.vertices`` induces ``w.pattern`` under the role order."""
    size, adj, _ = _role_adjacency(w.pattern)
    vs = w.vertices
    if len(vs) != size or len(set(vs)) != size or any(not 0 <= v < g.n for v in vs):
        return False
    return all(g.has_edge(vs[i], vs[j]) == adj[i][j]
               for i in range(size) for j in range(i + 1, size))


def check_class(g: Graph, *, patterns=(P5, HVN)) -> ClassReport:
    report = ClassReport(p5_free=None, hvn_free=None)
    for tag in patterns:
        w = find_induced(g, tag)
        report.checked[tag] = True
        if w is not None:
            report.witnesses[tag] = w
        if tag == P5:
            report.p5_free = w is None
        elif tag == HVN:
            report.hvn_free = w is None
    return report


def brute_force_contains(g: Graph, pattern: Graph) -> Optional[tuple[int, ...]]:
    """Exhaustive induced-subgraph search used as an oracle.

    Tries every ``|pattern|``-subset of ``g`` and every bijection onto the
    pattern's vertices; returns the lexicographically least matching tuple
    (tuple[i] plays pattern vertex i) or None.
    """
    k = pattern.n
    if k > BRUTE_FORCE_MAX_PATTERN or g.n > BRUTE_FORCE_MAX_N:
        raise CapExceeded(f"brute force capped at pattern<={BRUTE_FORCE_MAX_PATTERN}, "
                          f"n<={BRUTE_FORCE_MAX_N} (got {k}, {g.n})")
    pat_pairs = [(i, j, pattern.has_edge(i, j)) for i in range(k) for j in range(i + 1, k)]
    pat_m = pattern.m
    pat_degrees = sorted(pattern.degree(i) for i in range(k))
    best = None
    for subset in combinations(range(g.n), k):
        sub = set(subset)
        degs = sorted(len(g.adj[v] & sub) for v in subset)
        if sum(degs) != 2 * pat_m or degs != pat_degrees:
            continue
        for perm in permutations(subset):
            if best is not None and perm >= best:
                break
            if all(g.has_edge(perm[i], perm[j]) == e for i, j, e in pat_pairs):
                best = perm
                break
    return best
