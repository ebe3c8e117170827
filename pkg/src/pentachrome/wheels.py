"""Colorings of graphs containing a T-wheel or a Y-wheel, with at most omega+3 colors.

Colors are 1-based and named after their role: ``c1``, ``c2`` head the
omega colors spent on a paw-free piece, while ``omega+1``, ``omega+2`` and
``omega+3`` are the three extra colors handed to stable sets. Every bulk
assignment goes through a :class:`PaletteLedger`, which refuses colors
outside the permitted set and keeps a replayable log.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .base import Coloring, color_anticomplete_set, color_paw_free_prescribed
from .errors import (ClaimViolation, InternalInconsistency, NotPawFree, PreconditionViolation)
from .graph import Graph, connected_components, first_edge_inside, induced_subgraph
from .partition import Partition, T5_KIND, Y5_KIND


@dataclass(frozen=True)
class LedgerEntry:
    label: str
    vertices: tuple[int, ...]
    colors: tuple[int, ...]
    permitted: tuple[int, ...]


class PaletteLedger:
    """Palette ``1..omega+3`` plus a log of which class got which colors."""

    def __init__(self, omega: int):
        self.omega = omega
        self.size = omega + 3
        self.colors: dict[int, int] = {}
        self.log: list[LedgerEntry] = []

    @property
    def extra(self) -> tuple[int, int, int]:
        return (self.omega + 1, self.omega + 2, self.omega + 3)

    def assign(self, label: str, mapping: dict[int, int], permitted: Iterable[int]):
        permitted = tuple(sorted(set(permitted)))
        for v, c in mapping.items():
            if c not in permitted:
                raise InternalInconsistency(f"{label}: color {c} for vertex {v} not in {permitted}")
            if v in self.colors:
                raise InternalInconsistency(f"{label}: vertex {v} colored twice")
        self.colors.update(mapping)
        if mapping:
            self.log.append(LedgerEntry(label, tuple(sorted(mapping)),
                                        tuple(sorted(set(mapping.values()))), permitted))

    def assign_stable(self, g: Graph, label: str, vertices: Iterable[int], color: int):
        vs = frozenset(vertices)
        edge = first_edge_inside(g, vs)
        if edge:
            raise ClaimViolation(f"{label} should be stable but contains edge {edge}",
                                 rule=f"stable/{label}", vertices=edge)
        self.assign(label, {v: color for v in vs}, (color,))

    def replay(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for entry in self.log:
            for v in entry.vertices:
                out[v] = self.colors[v]
        return out

    def entry(self, label: str) -> Optional[LedgerEntry]:
        return next((e for e in self.log if e.label == label), None)


@dataclass(frozen=True)
class SplitClasses:
    """A stable class cut into the members with (``first``) and without (``second``)
    a neighbour in ``against``."""

    name: str
    first: frozenset[int]
    second: frozenset[int]
    against: frozenset[int]


def split_class(g: Graph, name: str, members: Iterable[int], against: Iterable[int]) -> SplitClasses:
    members, against = frozenset(members), frozenset(against)
    first = frozenset(u for u in members if g.adj[u] & against)
    return SplitClasses(name, first, members - first, against)


@dataclass
class WheelColoring(Coloring):
    ledger: Optional[PaletteLedger] = None
    case: str = ""
    split: Optional[SplitClasses] = None
    notes: dict = field(default_factory=dict)


def color_piece(g: Graph, vertices: Iterable[int], s: Iterable[int] = (),
                t: Iterable[int] = (), label: str = "piece") -> dict[int, int]:
    """Paw-free prescribed coloring of ``g[vertices]``, returned on original ids."""
    sub, index = induced_subgraph(g, vertices)
    back = {i: v for v, i in index.items()}
    try:
        piece = color_paw_free_prescribed(sub, [index[v] for v in s], [index[v] for v in t])
    except NotPawFree as exc:
        raise ClaimViolation(f"{label} should be paw-free", rule=f"paw-free/{label}",
                             vertices=tuple(back[i] for i in exc.vertices),
                             pattern=exc.pattern) from exc
    except PreconditionViolation as exc:
        raise ClaimViolation(f"{label}: prescription invalid ({exc})",
                             rule=f"prescription/{label}") from exc
    return {back[i]: c for i, c in piece.colors.items()}


def color_components(g: Graph, ledger: PaletteLedger, label: str, s: Iterable[int],
                     candidates: Sequence[int], singleton: Optional[int] = None):
    """Color each component of ``g[s]`` with colors from ``candidates``.

    A component is colored with at most omega colors on its own, then its
    colors are mapped in order onto the candidates not already used by its
    colored neighbours. ``singleton``, when given, colors one-vertex components.
    """
    s = frozenset(s)
    for comp in connected_components(g, within=s):
        nbr_colors = {ledger.colors[w] for v in comp for w in g.adj[v] if w in ledger.colors}
        if singleton is not None and len(comp) == 1:
            if singleton in nbr_colors:
                raise ClaimViolation(f"{label}: reserved color {singleton} taken next to {set(comp)}",
                                     rule=f"{label}/singleton", vertices=tuple(comp))
            ledger.assign(f"{label}", {min(comp): singleton}, (singleton,))
            continue
        piece = color_anticomplete_set(g, comp, ledger.omega)
        need = len(piece.used)
        avail = [c for c in candidates if c not in nbr_colors]
        if len(avail) < need:
            raise ClaimViolation(
                f"{label}: component {sorted(comp)} needs {need} colors, only {avail} free",
                rule=f"{label}/palette", vertices=tuple(sorted(comp)))
        rank = {c: i for i, c in enumerate(sorted(piece.used))}
        ledger.assign(label, {v: avail[rank[c]] for v, c in piece.colors.items()}, candidates)


def _finish(g: Graph, ledger: PaletteLedger, case: str, split, **notes) -> WheelColoring:
    if set(ledger.colors) != set(range(g.n)):
        missing = sorted(set(range(g.n)) - set(ledger.colors))
        raise InternalInconsistency(f"vertices {missing[:10]} left uncolored")
    out = WheelColoring(dict(sorted(ledger.colors.items())), ledger.size,
                        ledger=ledger, case=case, split=split, notes=notes)
    bad = out.conflict(g)
    if bad:
        raise InternalInconsistency(f"assembled coloring is improper on edge {bad}")
    return out


def _check_omega(omega: int, kind: str):
    if omega < 3:
        raise PreconditionViolation(f"a graph with a {kind} has omega >= 3, got {omega}")


def color_with_t5(g: Graph, part: Partition, omega: int) -> WheelColoring:
    """omega+3 colors around a T-wheel.

    If R4 is not stable (checked first) or R3 is not stable, the stable side
    becomes B and the rest of the wheel neighbourhood splits into a paw-free
    piece A (all adjacent to v5, resp. v2), a stable M and a stable D.
    The piece A is colored with c1..c_omega so that every A-neighbour of S
    gets c1 or c2; S then takes colors c3..c_{omega+2}.
    """
    if part.kind != T5_KIND:
        raise PreconditionViolation(f"expected a T-wheel partition, got {part.kind}")
    _check_omega(omega, "T-wheel")
    r3_stable = first_edge_inside(g, part["R3"]) is None
    r4_stable = first_edge_inside(g, part["R4"]) is None
    if not r3_stable and not r4_stable:
        raise ClaimViolation("R3 and R4 are both non-stable",
                             rule="t5/R3-R4-not-both-unstable",
                             vertices=first_edge_inside(g, part["R3"]) + first_edge_inside(g, part["R4"]))
    if not r4_stable:
        case = "R4-unstable"
        a = part.union("R1", "R1x", "Rb1", "Rb1x", "R4", "Y2", "Y5", "P3", "P3x", "P4", "T")
        b = part["R3"]
        m = part.union("Rb3", "Rb3x", "Y1x", "P2")
        core = part.union("Y2", "P4", "P3", "P3x", "T")
        split = split_class(g, "Y5", part["Y5"], core)
    else:
        case = "R3-unstable" if not r3_stable else "both-stable"
        a = part.union("R1", "R1x", "Rb1", "Rb1x", "R3", "Rb3", "Rb3x", "Y2", "Y5", "P2", "P3", "P3x", "T")
        b = part["R4"]
        m = part.union("P4", "Y1x")
        core = part.union("Y5", "P2", "P3", "P3x", "T")
        split = split_class(g, "Y2", part["Y2"], core)
    d = part.union("R2x", "R5x")

    ledger = PaletteLedger(omega)
    top = ledger.extra
    colors_a = color_piece(g, a, core | split.second, split.first, label="t5-A")
    ledger.assign("A", colors_a, range(1, omega + 1))
    ledger.assign_stable(g, "B", b, top[0])
    ledger.assign_stable(g, "D", d, top[1])
    ledger.assign_stable(g, "M", m, top[2])
    color_components(g, ledger, "S", part["S"], range(3, omega + 3))
    return _finish(g, ledger, case, split, A=sorted(a), B=sorted(b), M=sorted(m), D=sorted(d))


def color_with_y5(g: Graph, part: Partition, omega: int) -> WheelColoring:
    """omega+3 colors around a Y-wheel in a graph without T-wheels.

    N(x) is paw-free and takes c1..c_omega; the Y_ix family met by S is
    prescribed so that S sees only c1 and c2 there. The remaining classes
    form stable sets A, B (which depend on whether R1 or R2 is non-empty)
    and D, colored with the three extra colors.
    """
    if part.kind != Y5_KIND:
        raise PreconditionViolation(f"expected a Y-wheel partition, got {part.kind}")
    _check_omega(omega, "Y-wheel")
    x = part.apex
    nx = frozenset(g.adj[x])
    p34 = part.union("P3x", "P4x")
    s_set = part["S"]
    big = [c for c in connected_components(g, within=s_set) if len(c) >= 2]
    touched = []
    for name in ("Y1x", "Y2x", "Y3x", "Y5x"):
        if any(g.adj[u] & comp for u in part[name] for comp in big):
            touched.append(name)
    if len(touched) > 1:
        raise ClaimViolation(f"S is adjacent to several Y families: {touched}",
                             rule="y5/S-touches-one-Y",
                             vertices=tuple(sorted(s_set))[:2])
    if touched:
        split = split_class(g, touched[0], part[touched[0]], p34)
    else:
        split = SplitClasses("", frozenset(), frozenset(), p34)

    ledger = PaletteLedger(omega)
    top = ledger.extra
    colors_nx = color_piece(g, nx, split.second | p34, split.first, label="y5-N(x)")
    ledger.assign("N(x)", colors_nx, range(1, omega + 1))
    for comp in big:
        seen = {ledger.colors[w] for v in comp for w in g.adj[v] if w in nx}
        if len(seen) > 2:
            raise ClaimViolation(f"S-neighbours in N(x) use colors {sorted(seen)}",
                                 rule="y5/S-sees-two-colors", vertices=tuple(sorted(comp)))

    if part["R1"]:
        case = "R1-nonempty"
        a = part.union("R1", "R3", "Y2", "P3")
        b = part.union("R5", "Y1", "P4")
    elif part["R2"]:
        case = "R2-nonempty"
        a = part.union("P3", "R3", "Y2")
        b = part.union("R5", "Y1", "R2", "P4")
    else:
        case = "R1-R2-empty"
        a = part.union("R3", "Y2", "P3")
        b = part.union("R5", "Y1", "P4")
    d = part.union("Y4", "P1", "P2", "P5", "T")
    ledger.assign_stable(g, "A", a, top[0])
    ledger.assign_stable(g, "B", b, top[1])
    ledger.assign_stable(g, "D", d, top[2])
    color_components(g, ledger, "S", s_set, range(3, omega + 3), singleton=top[0])
    return _finish(g, ledger, case, split, A=sorted(a), B=sorted(b), D=sorted(d),
                   touched=touched)
