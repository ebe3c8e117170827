"""Exact clique number and chromatic number, plus greedy baselines.

Everything works on the bitmask adjacency of :class:`Graph`. Caps are read
from ``PENTACHROME_MAX_N`` when set; exceeding a cap raises
:class:`CapExceeded` rather than silently approximating.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .errors import CapExceeded, HintInfeasible
from .graph import Graph, bits

DEGENERACY = "DEGENERACY"
ASCENDING = "ASCENDING"

CLIQUE_CAP = 500
CHI_CAP = 64
CHI_CAP_WITH_HINT = 500


def _cap(default: int) -> int:
    env = os.environ.get("PENTACHROME_MAX_N")
    return int(env) if env else default


@dataclass(frozen=True)
class CliqueResult:
    size: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ChiResult:
    chi: int
    coloring: tuple[int, ...]  # 1-based color of each vertex


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last order: repeatedly strip a minimum-degree vertex (least index on ties).

    The returned list is the reverse of the removal order.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    removed = []
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        removed.append(v)
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return removed[::-1]


def greedy_coloring(g: Graph, order: str = DEGENERACY) -> tuple[int, ...]:
    """First-fit coloring (1-based) in degeneracy or ascending order."""
    seq = degeneracy_order(g) if order == DEGENERACY else list(range(g.n))
    color = [0] * g.n
    for v in seq:
        taken = {color[w] for w in g.adj[v]}
        c = 1
        while c in taken:
            c += 1
        color[v] = c
    return tuple(color)


def max_clique(g: Graph, cap: Optional[int] = None) -> CliqueResult:
    """Maximum clique by branch and bound with a greedy-coloring bound.

    Candidates are ordered by the degeneracy order (ties by least vertex), so
    the search and its witness are deterministic.
    """
    cap = _cap(CLIQUE_CAP) if cap is None else cap
    if g.n > cap:
        raise CapExceeded(f"max_clique capped at n={cap}, got {g.n}")
    if g.n == 0:
        return CliqueResult(0, ())
    order = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # bit i of pmask[i] refers to order[i]; lowest bit = earliest in branch order
    pmask = [sum(1 << pos[w] for w in g.adj[v]) for v in order]
    best: list[int] = []

    def color_classes(cand: int) -> list[tuple[int, int]]:
        out = []
        k = 0
        rest = cand
        while rest:
            k += 1
            q = rest
            while q:
                i = (q & -q).bit_length() - 1
                out.append((i, k))
                rest &= ~(1 << i)
                q &= ~(1 << i) & ~pmask[i]
        return out

    def expand(clique: list[int], cand: int):
        nonlocal best
        for i, bound in reversed(color_classes(cand)):
            if len(clique) + bound <= len(best):
                return
            grown = clique + [i]
            sub = cand & pmask[i]
            if sub:
                expand(grown, sub)
            elif len(grown) > len(best):
                best = grown
            cand &= ~(1 << i)

    expand([], g.full_mask)
    return CliqueResult(len(best), tuple(sorted(order[i] for i in best)))


def clique_number(g: Graph) -> int:
    return max_clique(g).size


def _k_colorable(g: Graph, k: int) -> Optional[list[int]]:
    """Backtracking k-coloring with DSATUR choice and forward checking.

    Symmetry breaking: a vertex may open at most one new color, the next
    unused index, so color classes appear in order of first use.
    """
    n = g.n
    masks = g.masks
    full = (1 << k) - 1
    color = [0] * n
    # domain[v] = bitmask of colors still allowed (bit c-1 for color c)
    domain = [full] * n

    def choose():
        best, key = -1, None
        for v in range(n):
            if color[v]:
                continue
            allowed = domain[v].bit_count()
            sat = k - allowed
            cand_key = (allowed, -sat, -g.degree(v), v)
            if key is None or cand_key < key:
                best, key = v, cand_key
        return best

    def solve(colored, used):
        if colored == n:
            return True
        v = choose()
        allowed = domain[v]
        if not allowed:
            return False
        limit = (1 << min(used + 1, k)) - 1
        for c0 in bits(allowed & limit):
            c = c0 + 1
            color[v] = c
            changed = []
            ok = True
            for w in bits(masks[v]):
                if not color[w] and domain[w] >> c0 & 1:
                    domain[w] &= ~(1 << c0)
                    changed.append(w)
                    if not domain[w]:
                        ok = False
                        break
            if ok and solve(colored + 1, max(used, c)):
                return True
            for w in changed:
                domain[w] |= 1 << c0
            color[v] = 0
        return False

    if solve(0, 0):
        return color
    return None


def chromatic_number_exact(g: Graph, upper_hint: Optional[int] = None,
                           cap: Optional[int] = None) -> ChiResult:
    """Exact chromatic number by iterative deepening from the clique bound.

    Without a hint the greedy (degeneracy) coloring supplies the upper bound.
    With a hint ``h`` the search never tries more than ``h`` colors and raises
    :class:`HintInfeasible` when ``g`` is not ``h``-colorable.
    """
    if cap is None:
        cap = _cap(CHI_CAP_WITH_HINT if upper_hint is not None else CHI_CAP)
    if g.n > cap:
        raise CapExceeded(f"chromatic_number_exact capped at n={cap}, got {g.n}")
    if g.n == 0:
        return ChiResult(0, ())
    lower = max_clique(g, cap=max(cap, g.n)).size
    greedy = greedy_coloring(g, DEGENERACY)
    upper = max(greedy)
    if upper_hint is not None and upper_hint < upper:
        upper = upper_hint
        fallback = None
    else:
        fallback = list(greedy)
    for k in range(lower, upper):
        found = _k_colorable(g, k)
        if found is not None:
            return ChiResult(k, tuple(found))
    if fallback is None:
        found = _k_colorable(g, upper)
        if found is None:
            raise HintInfeasible(upper)
        fallback = found
    return ChiResult(upper, tuple(fallback))
