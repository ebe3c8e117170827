"""Vertex partitions around an induced C5 or 5-wheel, and their structural checks.

Every vertex is classified by its *trace*: the exact set of witness vertices
it is adjacent to. On the cycle ``v1..v5`` (indices mod 5) the permitted
traces are

=========  =====================================
class      neighbours on the cycle
=========  =====================================
S          none
R_i        v(i-1), v(i+1)
Rb_i       v(i-1), v(i), v(i+1)
Y_i        v(i-2), v(i), v(i+2)
P_i        v(i-1), v(i), v(i+1), v(i+2)
T          all five
=========  =====================================

Around a wheel with apex ``x`` the same names denote vertices *not* adjacent
to ``x``; the suffix ``x`` (``R1x``, ``Y3x``...) marks the ones adjacent to
``x``, and ``X`` holds vertices whose only wheel neighbour is ``x``. Each
partition kind accepts only the traces its case analysis allows; any other
trace raises :class:`PartitionViolation`, which certifies the graph is
outside the hypothesised class.

Relabeling (reflection for the T-wheel, rotation for the wheel-free case) is
recorded as a permutation: new role ``i`` is old role ``permutation[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .detectors import C5, T5WHEEL, Y5WHEEL, Witness, verify_witness
from .errors import GraphError, PartitionViolation
from .graph import Graph, connected_components

C5_KIND, T5_KIND, Y5_KIND, WHEEL_FREE_KIND = "C5", "T5", "Y5", "WHEEL_FREE"

IDENTITY = (0, 1, 2, 3, 4)
REFLECT_T5 = (0, 4, 3, 2, 1)


def idx(i: int) -> int:
    """Cycle index arithmetic on 1..5."""
    return (i - 1) % 5 + 1


def _cycle_mask(*roles: int) -> int:
    m = 0
    for r in roles:
        m |= 1 << (idx(r) - 1)
    return m


# trace on the cycle (bit i-1 <-> v_i) -> class name
_TRACE_CLASS: dict[int, str] = {0: "S", 0b11111: "T"}
for _i in range(1, 6):
    _TRACE_CLASS[_cycle_mask(_i - 1, _i + 1)] = f"R{_i}"
    _TRACE_CLASS[_cycle_mask(_i - 1, _i, _i + 1)] = f"Rb{_i}"
    _TRACE_CLASS[_cycle_mask(_i - 2, _i, _i + 2)] = f"Y{_i}"
    _TRACE_CLASS[_cycle_mask(_i - 1, _i, _i + 1, _i + 2)] = f"P{_i}"

_T5_PLAIN = {"S", "R1", "R3", "R4", "Rb1", "Rb3", "Y2", "Y5", "P2", "P3", "P4", "T"}
_T5_WITH_X = {"R1x", "R2x", "R5x", "Rb1x", "Rb3x", "Y1x", "P3x"}
_Y5_PLAIN = {"S", "R1", "R2", "R3", "R5", "P1", "P2", "P3", "P4", "P5", "Y1", "Y2", "Y4", "T"}
_Y5_WITH_X = {"X", "R1x", "R2x", "R3x", "R4x", "R5x", "Y1x", "Y2x", "Y3x", "Y5x", "P3x", "P4x"}
_WHEEL_FREE = {"S", "T"} | {f"{c}{i}" for c in ("R", "P") for i in range(1, 6)}


@dataclass
class Partition:
    """Classes of every vertex relative to a (relabelled) witness."""

    kind: str
    graph: Graph
    cycle: tuple[int, ...]
    apex: Optional[int]
    classes: dict[str, frozenset[int]]
    permutation: tuple[int, ...] = IDENTITY
    original: tuple[int, ...] = ()
    membership: dict[int, str] = field(default_factory=dict)

    def __getitem__(self, name: str) -> frozenset[int]:
        return self.classes.get(name, frozenset())

    def union(self, *names: str) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for name in names:
            out |= self[name]
        return out

    @property
    def relabeled(self) -> bool:
        return self.permutation != IDENTITY

    @property
    def witness(self) -> tuple[int, ...]:
        return self.cycle + ((self.apex,) if self.apex is not None else ())

    def c5_classes(self) -> dict[str, frozenset[int]]:
        """Classes relative to the cycle alone: plain and x-families merged."""
        out = {}
        for name in _TRACE_CLASS.values():
            out[name] = self[name] | self[name + "x"]
        out["S"] = self["S"] | self["X"]
        out["T"] = self["T"] | self["Tx"]
        return out

    def nonempty(self) -> dict[str, list[int]]:
        return {k: sorted(v) for k, v in sorted(self.classes.items()) if v}


class C5Partition(Partition):
    pass


class T5Partition(Partition):
    pass


class Y5Partition(Partition):
    pass


class WheelFreePartition(Partition):
    pass


def _as_tuple(w) -> tuple[int, ...]:
    return tuple(w.vertices) if isinstance(w, Witness) else tuple(w)


def _classify(g: Graph, cycle: Sequence[int], apex: Optional[int]) -> dict[int, str]:
    members = {}
    for u in range(g.n):
        trace = 0
        for i, v in enumerate(cycle):
            if g.has_edge(u, v):
                trace |= 1 << i
        name = _TRACE_CLASS.get(trace)
        near_x = apex is not None and g.has_edge(u, apex)
        if name is None:
            members[u] = f"?{trace:05b}" + ("x" if near_x else "")
        elif near_x:
            members[u] = "X" if name == "S" else name + "x"
        else:
            members[u] = name
    return members


def _group(members: dict[int, str]) -> dict[str, frozenset[int]]:
    classes: dict[str, set[int]] = {}
    for u, name in members.items():
        classes.setdefault(name, set()).add(u)
    return {k: frozenset(v) for k, v in classes.items()}


def _reject(members: dict[int, str], allowed: set[str], kind: str):
    for u in sorted(members):
        name = members[u]
        if name not in allowed:
            raise PartitionViolation(
                f"{kind}: vertex {u} has trace {name!r}, which no permitted class accepts",
                rule=f"{kind.lower()}/trace", vertices=(u,))


def _check_cover(members: dict[int, str], classes: dict[str, frozenset[int]], n: int):
    seen = set()
    for name, vs in classes.items():
        if seen & vs:
            raise PartitionViolation(f"class {name} overlaps another class",
                                     rule="cover/disjoint", vertices=sorted(seen & vs))
        seen |= vs
    if seen != set(range(n)):
        raise PartitionViolation("classes do not cover V(G)", rule="cover/union",
                                 vertices=sorted(set(range(n)) - seen))


def _require(g: Graph, tag: str, vertices: tuple[int, ...]):
    if not verify_witness(g, Witness(tag, vertices)):
        raise GraphError(f"{vertices} is not an induced {tag} of the graph")


def _build(cls, kind, g, cycle, apex, allowed, permutation, original):
    members = _classify(g, cycle, apex)
    _reject(members, allowed, kind)
    classes = _group(members)
    _check_cover(members, classes, g.n)
    return cls(kind=kind, graph=g, cycle=tuple(cycle), apex=apex, classes=classes,
               permutation=permutation, original=original, membership=members)


def partition_by_c5(g: Graph, cycle) -> C5Partition:
    cyc = _as_tuple(cycle)
    _require(g, C5, cyc)
    allowed = set(_TRACE_CLASS.values())
    return _build(C5Partition, C5_KIND, g, cyc, None, allowed, IDENTITY, cyc)


def partition_by_t5(g: Graph, wheel) -> T5Partition:
    """Classes around a T-wheel ``(v1..v5, x)`` with ``x ~ v1, v2, v5``.

    If some vertex has trace Rb4 (with or without ``x``), the cycle is read
    in reverse from ``v1`` first, so that the fourth class is always empty.
    """
    w = _as_tuple(wheel)
    _require(g, T5WHEEL, w)
    cycle, apex = w[:5], w[5]
    perm = IDENTITY
    members = _classify(g, cycle, apex)
    if any(name in ("Rb4", "Rb4x") for name in members.values()):
        perm = REFLECT_T5
        cycle = tuple(w[p] for p in perm)
    allowed = _T5_PLAIN | _T5_WITH_X
    return _build(T5Partition, T5_KIND, g, cycle, apex, allowed, perm, w)


def partition_by_y5(g: Graph, wheel) -> Y5Partition:
    """Classes around a Y-wheel ``(v1..v5, x)`` with ``x ~ v1, v2, v4``; needs no T-wheel."""
    w = _as_tuple(wheel)
    _require(g, Y5WHEEL, w)
    allowed = _Y5_PLAIN | _Y5_WITH_X
    return _build(Y5Partition, Y5_KIND, g, w[:5], w[5], allowed, IDENTITY, w)


def partition_wheel_free(g: Graph, cycle) -> WheelFreePartition:
    """Classes S, T, R_i, P_i around a C5 in a graph without 5-wheels.

    The cycle is rotated so that R1 is non-empty whenever some R_i is. The
    cycle vertices themselves sit in R_1..R_5, so in practice the rotation
    is the identity; it is kept to make the convention explicit.
    """
    cyc = _as_tuple(cycle)
    _require(g, C5, cyc)
    members = _classify(g, cyc, None)
    _reject(members, _WHEEL_FREE, WHEEL_FREE_KIND)
    perm = IDENTITY
    names = set(members.values())
    first = next((i for i in range(1, 6) if f"R{i}" in names), 1)
    if first != 1:
        perm = tuple((first - 1 + k) % 5 for k in range(5))
        cyc = tuple(_as_tuple(cycle)[p] for p in perm)
    return _build(WheelFreePartition, WHEEL_FREE_KIND, g, cyc, None, _WHEEL_FREE, perm,
                  _as_tuple(cycle))


# -- structural checks ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str
    detail: str
    vertices: tuple[int, ...] = ()

    def __str__(self):
        return f"{self.rule}: {self.detail} {list(self.vertices)}"


class _Checker:
    def __init__(self, g: Graph):
        self.g = g
        self.out: list[Violation] = []

    def stable(self, rule: str, label: str, a: Iterable[int]):
        a = frozenset(a)
        for u in sorted(a):
            hit = self.g.adj[u] & a
            if hit:
                self.out.append(Violation(rule, f"{label} is not stable", (u, min(hit))))
                return

    def anti(self, rule: str, label: str, a: Iterable[int], b: Iterable[int]):
        a, b = frozenset(a), frozenset(b)
        for u in sorted(a):
            hit = self.g.adj[u] & (b - {u})
            if hit:
                self.out.append(Violation(rule, f"{label}: edge between", (u, min(hit))))
                return

    def complete(self, rule: str, label: str, a: Iterable[int], b: Iterable[int]):
        a, b = frozenset(a), frozenset(b)
        for u in sorted(a):
            miss = b - self.g.adj[u] - {u}
            if miss:
                self.out.append(Violation(rule, f"{label}: non-edge between", (u, min(miss))))
                return

    def empty(self, rule: str, label: str, a: Iterable[int]):
        a = frozenset(a)
        if a:
            self.out.append(Violation(rule, f"{label} is not empty", tuple(sorted(a))))

    def nbhd_within(self, rule: str, label: str, s: frozenset, allowed: frozenset):
        for u in sorted(s):
            stray = self.g.adj[u] - s - allowed
            if stray:
                self.out.append(Violation(rule, f"{label}: neighbour outside permitted classes",
                                          (u, min(stray))))
                return


def _c5_rules(ck: _Checker, c: dict[str, frozenset[int]]):
    P = lambda i: c[f"P{idx(i)}"]
    R = lambda i: c[f"R{idx(i)}"]
    Rb = lambda i: c[f"Rb{idx(i)}"]
    Y = lambda i: c[f"Y{idx(i)}"]
    ck.stable("c5/T+P-stable", "T with all P_i", c["T"].union(*(P(i) for i in range(1, 6))))
    for i in range(1, 6):
        ck.stable("c5/Y-stable", f"Y{i}", Y(i))
        ck.anti("c5/T-anti-Rb-Y", f"T vs Rb{i} and Y{i}", c["T"], Rb(i) | Y(i))
        ck.anti("c5/Y-anti-P", f"Y{i} vs P{idx(i + 1)}, P{idx(i + 2)}, P{idx(i - 2)}",
                Y(i), P(i + 1) | P(i + 2) | P(i - 2))
        ck.anti("c5/Y-anti-Rb", f"Y{i} vs Rb{idx(i + 2)}, Rb{idx(i - 2)}", Y(i),
                Rb(i + 2) | Rb(i - 2))
        for j in range(1, 6):
            if j != idx(i - 2):
                ck.anti("c5/P-anti-Rb", f"P{i} vs Rb{j}", P(i), Rb(j))
        ck.complete("c5/R-complete-next", f"R{i}+Rb{i} vs R{idx(i + 1)}+Rb{idx(i + 1)}",
                    R(i) | Rb(i), R(i + 1) | Rb(i + 1))
        if Rb(i) and Rb(i + 1):
            ck.out.append(Violation("c5/Rb-consecutive", f"Rb{i} and Rb{idx(i + 1)} both non-empty",
                                    (min(Rb(i)), min(Rb(i + 1)))))
        ck.anti("c5/S-anti-R", f"S vs R{i}+Rb{i}", c["S"], R(i) | Rb(i))


def _is_stable(g: Graph, a: frozenset) -> bool:
    return all(not (g.adj[u] & a) for u in a)


def _t5_rules(ck: _Checker, p: Partition):
    g = ck.g
    ck.empty("t5/Tx-empty", "Tx", p["Tx"])
    ck.empty("t5/Rb4-empty", "Rb4 + Rb4x (after relabeling)", p.union("Rb4", "Rb4x"))
    r3_ok, r4_ok = _is_stable(g, p["R3"]), _is_stable(g, p["R4"])
    if not r3_ok and not r4_ok:
        ck.out.append(Violation("t5/R3-R4-not-both-unstable", "R3 and R4 both non-stable",
                                (min(p["R3"]), min(p["R4"]))))
    if not r4_ok:
        ck.stable("t5/R3-side-stable", "R3 + Rb3 + Rb3x (R4 non-stable)", p.union("R3", "Rb3", "Rb3x"))
    if not r3_ok:
        ck.stable("t5/R4-stable", "R4 (R3 non-stable)", p["R4"])
    ck.stable("t5/R2x+R5x-stable", "R2x + R5x", p.union("R2x", "R5x"))
    for name in ("Y2", "Y5", "Y1x", "P2", "P3", "P4", "P3x", "T"):
        ck.stable("t5/class-stable", name, p[name])
    ck.anti("t5/Y1x-anti-Rb3", "Y1x vs Rb3 + Rb3x", p["Y1x"], p.union("Rb3", "Rb3x"))
    ck.anti("t5/S-anti-core", "S vs R, Rb and R_x classes", p["S"],
            p.union("R1", "R3", "R4", "R1x", "R2x", "R5x", "Rb1", "Rb1x", "Rb3", "Rb3x"))
    ck.anti("t5/S-anti-P2-P4", "S vs P2 + P4", p["S"], p.union("P2", "P4"))
    ck.nbhd_within("t5/S-neighbourhood", "N(S)", p["S"],
                   p.union("Y2", "Y5", "Y1x", "P3", "P3x", "T"))


def _y5_rules(ck: _Checker, p: Partition):
    g = ck.g
    for name in ("R1", "R2", "R3", "R5", "P1", "P2", "P3", "P4", "P5", "Y1", "Y2", "Y4"):
        ck.stable("y5/class-stable", name, p[name])
    if p["R1"] and p["R2"]:
        ck.out.append(Violation("y5/R1-or-R2-empty", "R1 and R2 both non-empty",
                                (min(p["R1"]), min(p["R2"]))))
    ck.anti("y5/R1-anti-R3", "R1 vs R3", p["R1"], p["R3"])
    ck.anti("y5/R2-anti-R5", "R2 vs R5", p["R2"], p["R5"])
    ck.anti("y5/Y2-anti-R1-R3", "Y2 vs R1 + R3", p["Y2"], p.union("R1", "R3"))
    ck.anti("y5/Y1-anti-R2-R5", "Y1 vs R2 + R5", p["Y1"], p.union("R2", "R5"))
    ck.anti("y5/P3-anti-R1-R3", "P3 vs R1 + R3", p["P3"], p.union("R1", "R3"))
    ck.anti("y5/P4-anti-R2-R5", "P4 vs R2 + R5", p["P4"], p.union("R2", "R5"))
    ck.nbhd_within("y5/S-neighbourhood", "N(S)", p["S"],
                   p.union("Y4", "Y1x", "Y2x", "Y3x", "Y5x", "P2", "P5", "P3x", "P4x", "T"))
    families = ("Y4", "Y1x", "Y2x", "Y3x", "Y5x")
    for comp in connected_components(g, within=p["S"]):
        if len(comp) < 2:
            continue
        touched = []
        for name in families:
            hit = False
            for u in sorted(p[name]):
                k = len(g.adj[u] & comp)
                if 0 < k < len(comp):
                    ck.out.append(Violation("y5/Y-homogeneous-to-S",
                                            f"{name} vertex splits an S component", (u, min(comp))))
                hit = hit or k > 0
            if hit:
                touched.append(name)
        if len(touched) > 1:
            ck.out.append(Violation("y5/S-touches-one-Y", f"S component meets {touched}",
                                    tuple(sorted(comp))[:2]))


def _wheel_free_rules(ck: _Checker, p: Partition):
    ck.stable("wf/T+P-stable", "T with all P_i", p.union("T", "P1", "P2", "P3", "P4", "P5"))
    any_r = False
    for i in range(1, 6):
        r = p[f"R{i}"]
        any_r = any_r or bool(r)
        ck.stable("wf/R-stable", f"R{i}", r)
        ck.anti("wf/R-anti-R+2", f"R{i} vs R{idx(i + 2)}", r, p[f"R{idx(i + 2)}"])
        ck.complete("wf/R-complete-next", f"R{i} vs R{idx(i + 1)}", r, p[f"R{idx(i + 1)}"])
        ck.anti("wf/S-anti-R", f"S vs R{i}", p["S"], r)
    if any_r and not p["R1"]:
        ck.out.append(Violation("wf/R1-nonempty", "R1 empty after relabeling"))
    for name in p.classes:
        if name not in _WHEEL_FREE:
            ck.out.append(Violation("wf/classes", f"class {name} present", tuple(sorted(p[name]))))


def validate_partition(p: Partition) -> list[Violation]:
    """Every structural property of the partition kind, as a list of violations."""
    g = p.graph
    ck = _Checker(g)
    try:
        _check_cover(p.membership or {}, p.classes, g.n)
    except PartitionViolation as exc:
        ck.out.append(Violation(exc.rule, str(exc), exc.vertices))
    _c5_rules(ck, p.c5_classes())
    if p.kind == T5_KIND:
        _t5_rules(ck, p)
    elif p.kind == Y5_KIND:
        _y5_rules(ck, p)
    elif p.kind == WHEEL_FREE_KIND:
        _wheel_free_rules(ck, p)
    return ck.out
