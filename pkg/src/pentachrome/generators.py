"""Seeded generators of (P5, HVN)-free graphs.

Randomness comes from :class:`random.Random` (Mersenne Twister), seeded
with the 64-bit seed of the spec, so outputs are identical across
platforms and Python versions. Every output is re-verified in-class before
it is returned: by exhaustive search for n <= 12, by the detectors above.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .detectors import (C5, HVN, P5, T5WHEEL, Y5WHEEL, brute_force_contains, find_induced,
                        find_induced_through, has_induced_hvn, has_induced_p5, pattern_graph)
from .errors import GraphError, PentachromeError
from .formats import EDGE_LIST, GraphDocument
from .graph import (Graph, complete_multipartite, cycle_graph, five_ring, t5_wheel, y5_wheel)

FIVE_RING = "FIVE_RING"
COMPLETE_MULTIPARTITE = "COMPLETE_MULTIPARTITE"
RANDOM_IN_CLASS = "RANDOM_IN_CLASS"
WHEEL_SEEDED = "WHEEL_SEEDED"
KINDS = (FIVE_RING, COMPLETE_MULTIPARTITE, RANDOM_IN_CLASS, WHEEL_SEEDED)

SEED_MASK = (1 << 64) - 1


class GenerationFailed(PentachromeError):
    def __init__(self, message: str, tries: int):
        super().__init__(message)
        self.tries = tries


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``wheel`` is ``T5``, ``Y5`` or ``C5`` for WHEEL_SEEDED; with ``Y5`` the
    result also stays free of T-wheels, with ``C5`` free of both wheels, so
    each seed type exercises its own coloring strategy.
    """

    kind: str
    parts: tuple[int, ...] = ()
    n: int = 0
    p: float = 0.5
    seed: int = 0
    max_tries: int = 10000
    wheel: str = "T5"
    augment: int = 0
    proposals: int = 200

    def label(self) -> str:
        if self.kind in (FIVE_RING, COMPLETE_MULTIPARTITE):
            return f"{self.kind.lower()}-{'-'.join(map(str, self.parts))}"
        if self.kind == RANDOM_IN_CLASS:
            return f"random-n{self.n}-p{self.p:g}-s{self.seed}"
        return f"wheel-{self.wheel.lower()}-a{self.augment}-s{self.seed}"


_WHEEL_START = {"T5": (t5_wheel, ()), "Y5": (y5_wheel, (T5WHEEL,)),
                "C5": (lambda: cycle_graph(5), (T5WHEEL, Y5WHEEL))}


def in_class(g: Graph, avoid=()) -> bool:
    """(P5, HVN)-freeness plus absence of the extra ``avoid`` patterns."""
    if g.n <= 12:
        pats = [P5, HVN, *avoid]
        return all(brute_force_contains(g, pattern_graph(t)) is None for t in pats)
    if has_induced_p5(g) or has_induced_hvn(g):
        return False
    return all(find_induced(g, t) is None for t in avoid)


def _erdos_renyi(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def _random_in_class(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed & SEED_MASK)
    for tries in range(1, spec.max_tries + 1):
        g = _erdos_renyi(rng, spec.n, spec.p)
        if not has_induced_p5(g) and not has_induced_hvn(g):
            return g
    raise GenerationFailed(f"no (P5, HVN)-free graph in {spec.max_tries} tries "
                           f"(n={spec.n}, p={spec.p})", spec.max_tries)


def _extend(g: Graph, nbrs) -> Graph:
    n = g.n
    return Graph(n + 1, g.edges + [(v, n) for v in sorted(nbrs)])


def _propose(rng: random.Random, g: Graph, seed_size: int) -> set[int]:
    v = rng.randrange(g.n)
    kind = rng.random()
    if kind < 0.25:                     # false twin
        return set(g.adj[v])
    if kind < 0.4:                      # true twin
        return set(g.adj[v]) | {v}
    if kind < 0.65:                     # perturbed twin
        base = set(g.adj[v]) | ({v} if rng.random() < 0.5 else set())
        for _ in range(rng.randint(1, 2)):
            u = rng.randrange(g.n)
            base ^= {u}
        return base
    if kind < 0.85 and g.n > seed_size:  # away from the seed wheel
        v = rng.randrange(seed_size, g.n)
        base = {u for u in g.adj[v] if u >= seed_size and rng.random() < 0.7}
        return base | {v} if rng.random() < 0.7 else base or {v}
    k = rng.randint(1, max(1, min(g.n, 6)))
    return set(rng.sample(range(g.n), k))


def _accepts(g: Graph, avoid) -> bool:
    """The new vertex ``g.n - 1`` creates no forbidden pattern (the rest already had none)."""
    if has_induced_p5(g) or has_induced_hvn(g):
        return False
    v = g.n - 1
    return all(find_induced_through(g, t, v) is None for t in avoid)


def _wheel_seeded(spec: GenSpec) -> Graph:
    if spec.wheel not in _WHEEL_START:
        raise GraphError(f"wheel must be one of {sorted(_WHEEL_START)}, got {spec.wheel!r}")
    start, avoid = _WHEEL_START[spec.wheel]
    rng = random.Random(spec.seed & SEED_MASK)
    g = start()
    seed_size = g.n
    tries = 0
    while g.n < 6 + spec.augment - (spec.wheel == "C5"):
        for _ in range(spec.proposals):
            tries += 1
            if tries > spec.max_tries:
                raise GenerationFailed(f"stuck at n={g.n} after {tries - 1} proposals", tries - 1)
            nbrs = _propose(rng, g, seed_size)
            if not nbrs:
                continue
            h = _extend(g, nbrs)
            if _accepts(h, avoid):
                g = h
                break
        else:
            raise GenerationFailed(f"no accepted vertex among {spec.proposals} proposals "
                                   f"at n={g.n}", tries)
    return g


def generate(spec: GenSpec) -> GraphDocument:
    if spec.kind == FIVE_RING:
        g = five_ring(spec.parts)
    elif spec.kind == COMPLETE_MULTIPARTITE:
        if not spec.parts or min(spec.parts) < 1:
            raise GraphError(f"parts must be positive, got {spec.parts}")
        g = complete_multipartite(spec.parts)
    elif spec.kind == RANDOM_IN_CLASS:
        g = _random_in_class(spec)
    elif spec.kind == WHEEL_SEEDED:
        g = _wheel_seeded(spec)
    else:
        raise GraphError(f"unknown generator kind {spec.kind!r}")
    avoid = _WHEEL_START[spec.wheel][1] if spec.kind == WHEEL_SEEDED else ()
    if not in_class(g, avoid):
        raise GenerationFailed(f"{spec.label()} failed the final class check", 0)
    return GraphDocument(EDGE_LIST, g, spec.label())
