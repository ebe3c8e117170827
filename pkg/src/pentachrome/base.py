"""Colorings of paw-free and (P5, K3)-free pieces with prescribed classes.

Both structure theorems used here are statements about connected graphs
(``K3 + K1`` is paw-free yet neither complete multipartite nor
triangle-free), so the classifiers expect a connected input and the colorers
work component by component.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .detectors import C5, P5, PAW, find_induced
from .errors import (GraphError, InternalInconsistency, NotInClass, NotPawFree,
                     PreconditionViolation)
from .graph import (Graph, bipartition, bits, connected_components, first_edge_inside,
                    induced_subgraph, is_stable_set)

COMPLETE_MULTIPARTITE = "COMPLETE_MULTIPARTITE"
TRIANGLE_FREE = "TRIANGLE_FREE"
BIPARTITE = "BIPARTITE"
FIVE_RING = "FIVE_RING"


@dataclass
class Coloring:
    """Vertex -> color (1-based). ``palette_size`` bounds every color used."""

    colors: dict[int, int]
    palette_size: int

    def __post_init__(self):
        if self.colors and max(self.colors.values()) > self.palette_size:
            raise InternalInconsistency(
                f"color {max(self.colors.values())} exceeds palette {self.palette_size}")

    @property
    def used(self) -> set[int]:
        return set(self.colors.values())

    def conflict(self, g: Graph) -> Optional[tuple[int, int]]:
        """First monochromatic edge among colored vertices, or None."""
        for u, c in sorted(self.colors.items()):
            for v in g.adj[u]:
                if v > u and self.colors.get(v) == c:
                    return (u, v)
        return None

    def is_proper(self, g: Graph) -> bool:
        return self.conflict(g) is None


@dataclass(frozen=True)
class PawFreeShape:
    tag: str
    parts: tuple[frozenset[int], ...] = ()


@dataclass(frozen=True)
class P5K3Shape:
    tag: str
    parts: tuple[frozenset[int], ...]  # two sides, or R1..R5


def _find_triangle(g: Graph) -> Optional[tuple[int, int, int]]:
    masks = g.masks
    for u in range(g.n):
        for v in bits(masks[u] & ~((1 << (u + 1)) - 1)):
            common = masks[u] & masks[v] & ~((1 << (v + 1)) - 1)
            if common:
                return (u, v, (common & -common).bit_length() - 1)
    return None


def multipartite_parts(g: Graph) -> Optional[tuple[frozenset[int], ...]]:
    """Parts of ``g`` if it is complete multipartite, ordered by least vertex."""
    full = g.full_mask
    parts = []
    rest = full
    while rest:
        a = (rest & -rest).bit_length() - 1
        part = full & ~g.masks[a]
        for b in bits(part):
            if full & ~g.masks[b] != part:
                return None
        parts.append(frozenset(bits(part)))
        rest &= ~part
    return tuple(parts)


def classify_paw_free(g: Graph) -> PawFreeShape:
    """Complete multipartite (with parts) or triangle-free; expects ``g`` connected."""
    parts = multipartite_parts(g)
    if parts is not None:
        return PawFreeShape(COMPLETE_MULTIPARTITE, parts)
    tri = _find_triangle(g)
    if tri is None:
        return PawFreeShape(TRIANGLE_FREE)
    paw = find_induced(g, PAW)
    if paw is not None:
        raise NotPawFree("graph contains an induced paw", pattern=PAW, witness=paw,
                         vertices=paw.vertices)
    raise GraphError("paw-free graph with a triangle that is not complete multipartite "
                     "must be disconnected; classify each component")


def paw_free_omega(g: Graph) -> int:
    """Clique number of a paw-free graph read off its per-component shapes."""
    best = 0
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        shape = classify_paw_free(sub)
        if shape.tag == COMPLETE_MULTIPARTITE:
            best = max(best, len(shape.parts))
        else:
            best = max(best, 2 if sub.m else 1)
    return best


def recognize_p5_k3_free(g: Graph) -> P5K3Shape:
    """Bipartite sides, or the five parts of a 5-ring; expects ``g`` connected."""
    sides = bipartition(g)
    if sides is not None:
        return P5K3Shape(BIPARTITE, sides)
    tri = _find_triangle(g)
    if tri is not None:
        raise NotInClass("graph contains a triangle", pattern="K3", witness=tri, vertices=tri)
    cyc = find_induced(g, C5)
    if cyc is None:
        p5 = find_induced(g, P5)
        raise NotInClass("odd cycle without an induced C5", pattern=P5, witness=p5,
                         vertices=p5.vertices if p5 else ())
    cycle = cyc.vertices
    parts = [set() for _ in range(5)]
    for u in range(g.n):
        trace = tuple(i for i in range(5) if g.has_edge(u, cycle[i]))
        hit = [i for i in range(5) if trace == tuple(sorted(((i - 1) % 5, (i + 1) % 5)))]
        if not hit:
            p5 = find_induced(g, P5)
            raise NotInClass(f"vertex {u} does not fit a 5-ring around {cycle}",
                             pattern=P5 if p5 else None, witness=p5, vertices=(u,))
        parts[hit[0]].add(u)
    frozen = tuple(frozenset(p) for p in parts)
    for i in range(5):
        for j in range(i, 5):
            gap = (j - i) % 5
            for u in frozen[i]:
                want = gap in (1, 4)
                if any(g.has_edge(u, v) != want for v in frozen[j] if v != u):
                    raise NotInClass(f"parts {i + 1} and {j + 1} break the 5-ring pattern",
                                     vertices=(u,))
    return P5K3Shape(FIVE_RING, frozen)


def _check_prescription(g: Graph, s: frozenset, t: frozenset):
    if s & t:
        raise PreconditionViolation(f"S and T intersect in {sorted(s & t)}")
    edge = first_edge_inside(g, s)
    if edge:
        raise PreconditionViolation(f"S is not stable: edge {edge}")
    edge = first_edge_inside(g, t)
    if edge:
        raise PreconditionViolation(f"T is not stable: edge {edge}")
    if t and not s:
        raise PreconditionViolation("T is non-empty but S is empty")
    for v in sorted(t):
        if not g.adj[v] & s:
            raise PreconditionViolation(f"vertex {v} of T has no neighbour in S")


def _list_color(g: Graph, domains: list[int], prefer: list[int]) -> Optional[list[int]]:
    """Backtracking list coloring; ``domains[v]`` is a bitmask of allowed colors.

    Most-constrained vertex first, forward checking, preferred color tried first.
    """
    n = g.n
    masks = g.masks
    dom = list(domains)
    color = [0] * n

    def pick():
        best, key = -1, None
        for v in range(n):
            if not color[v]:
                k = (dom[v].bit_count(), -g.degree(v), v)
                if key is None or k < key:
                    best, key = v, k
        return best

    def solve(left):
        if not left:
            return True
        v = pick()
        options = list(bits(dom[v]))
        pref = prefer[v] - 1
        if pref in options:
            options.remove(pref)
            options.insert(0, pref)
        for c0 in options:
            color[v] = c0 + 1
            changed = []
            ok = True
            for w in bits(masks[v]):
                if not color[w] and dom[w] >> c0 & 1:
                    dom[w] &= ~(1 << c0)
                    changed.append(w)
                    if not dom[w]:
                        ok = False
                        break
            if ok and solve(left - 1):
                return True
            for w in changed:
                dom[w] |= 1 << c0
            color[v] = 0
        return False

    for v in range(n):
        if not dom[v]:
            return None
    return color if solve(n) else None


def _seed_colors(g: Graph, s: frozenset, t: frozenset) -> list[int]:
    """A proper 3-coloring read off the shape, rotated to agree with (s, t) where it can."""
    seed = [1] * g.n
    if g.n == 0:
        return seed
    shape = recognize_p5_k3_free(g)
    if shape.tag == BIPARTITE:
        x, y = shape.parts
        first, second = (x, y) if len(s & x) >= len(s & y) else (y, x)
        for v in first:
            seed[v] = 1
        for v in second:
            seed[v] = 2
        return seed
    pattern = (1, 2, 1, 2, 3)
    best, best_score = 0, -1
    for shift in range(5):
        score = sum(len(s & shape.parts[i]) * (pattern[(i + shift) % 5] == 1)
                    + len(t & shape.parts[i]) * (pattern[(i + shift) % 5] == 2) for i in range(5))
        if score > best_score:
            best, best_score = shift, score
    for i, part in enumerate(shape.parts):
        for v in part:
            seed[v] = pattern[(i + best) % 5]
    return seed


def color_triangle_free_prescribed(g: Graph, s: Iterable[int], t: Iterable[int] = ()) -> Coloring:
    """Proper 3-coloring of a (P5, K3)-free graph with ``s`` in color 1 and ``t`` in color 2.

    Such a coloring always exists when ``s``, ``t`` are disjoint stable sets and
    every vertex of ``t`` has a neighbour in ``s``. Each component is seeded
    from its bipartite/5-ring shape and then solved exactly by list-coloring
    search with the seed as value ordering.
    """
    s, t = frozenset(s), frozenset(t)
    _check_prescription(g, s, t)
    colors: dict[int, int] = {}
    for comp in connected_components(g):
        sub, index = induced_subgraph(g, comp)
        back = {i: v for v, i in index.items()}
        ss = frozenset(index[v] for v in s & comp)
        tt = frozenset(index[v] for v in t & comp)
        seed = _seed_colors(sub, ss, tt)
        domains = [0b001 if v in ss else 0b010 if v in tt else 0b111 for v in range(sub.n)]
        found = _list_color(sub, domains, seed)
        if found is None:
            raise InternalInconsistency(
                f"no prescribed 3-coloring found on component {sorted(comp)}")
        colors.update({back[i]: c for i, c in enumerate(found)})
    return Coloring(colors, 3)


def color_paw_free_prescribed(g: Graph, s: Iterable[int] = (), t: Iterable[int] = ()) -> Coloring:
    """Coloring of a (P5, paw)-free graph with at most omega+1 colors.

    ``s`` gets color 1 and ``t`` color 2. Complete multipartite components use
    one color per part (the parts of ``s`` and ``t`` first, then the least
    free colors in ascending least-vertex order); triangle-free components use
    the prescribed 3-coloring.
    """
    s, t = frozenset(s), frozenset(t)
    _check_prescription(g, s, t)
    colors: dict[int, int] = {}
    omega = 0
    for comp in connected_components(g):
        sub, index = induced_subgraph(g, comp)
        back = {i: v for v, i in index.items()}
        ss = frozenset(index[v] for v in s & comp)
        tt = frozenset(index[v] for v in t & comp)
        shape = classify_paw_free(sub)
        if shape.tag == COMPLETE_MULTIPARTITE:
            omega = max(omega, len(shape.parts))
            reserved = {}
            for part in shape.parts:
                if ss and ss <= part:
                    reserved[part] = 1
                elif tt and tt <= part:
                    reserved[part] = 2
            taken = set(reserved.values())
            nxt = 1
            for part in shape.parts:
                if part in reserved:
                    c = reserved[part]
                else:
                    while nxt in taken:
                        nxt += 1
                    c = nxt
                    taken.add(c)
                for v in part:
                    colors[back[v]] = c
        else:
            omega = max(omega, 2 if sub.m else 1)
            piece = color_triangle_free_prescribed(sub, ss, tt)
            colors.update({back[v]: c for v, c in piece.colors.items()})
    return Coloring(colors, omega + 1)


def color_anticomplete_set(g: Graph, s: Iterable[int], omega_g: int) -> Coloring:
    """Color ``g[s]`` with at most ``omega_g`` colors, one component at a time.

    ``s`` is the set of vertices with no neighbour in some induced subgraph
    containing a paw; in a connected (P5, HVN)-free host every component of
    ``g[s]`` then has a vertex outside complete to it and is paw-free.
    """
    s = frozenset(s)
    colors: dict[int, int] = {}
    for comp in connected_components(g, within=s):
        sub, index = induced_subgraph(g, comp)
        back = {i: v for v, i in index.items()}
        try:
            piece = color_paw_free_prescribed(sub)
        except (NotPawFree, GraphError) as exc:
            raise NotPawFree(f"component {sorted(comp)} of the anticomplete set is not paw-free",
                             rule="anticomplete-set-paw-free", vertices=sorted(comp),
                             pattern=PAW, witness=getattr(exc, "witness", None)) from exc
        if piece.used and max(piece.used) > omega_g:
            raise NotPawFree(f"component {sorted(comp)} needs {max(piece.used)} colors "
                             f"> omega={omega_g}", rule="anticomplete-set-omega",
                             vertices=sorted(comp))
        colors.update({back[v]: c for v, c in piece.colors.items()})
    return Coloring(colors, omega_g)


def is_proper(g: Graph, colors) -> bool:
    get = colors.get if isinstance(colors, dict) else (lambda v: colors[v])
    return all(get(u) != get(v) for u, v in g.edges)


__all__ = [
    "Coloring", "PawFreeShape", "P5K3Shape", "classify_paw_free", "recognize_p5_k3_free",
    "color_triangle_free_prescribed", "color_paw_free_prescribed", "color_anticomplete_set",
    "multipartite_parts", "paw_free_omega", "is_stable_set",
]
