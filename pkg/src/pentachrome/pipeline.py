"""Strategy dispatch, the wheel-free coloring, and coloring certificates.

Each connected component is handled on its own, in this order: a T-wheel
if one exists, else a Y-wheel, else an induced C5 (wheel-free case), else
an exact coloring with at most omega+1 colors. Components share the
palette. Colors are compacted per component only when the certificate is
emitted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .base import classify_paw_free, COMPLETE_MULTIPARTITE
from .detectors import (C5, HVN, P5, T5WHEEL, Y5WHEEL, ClassReport, Witness, check_class,
                        find_induced, verify_witness)
from .errors import (CapExceeded, ClaimViolation, GraphError, HintInfeasible,
                     InternalInconsistency, OutsideClass, PreconditionViolation)
from .graph import Graph, connected_components, induced_subgraph, is_clique
from .oracles import (DEGENERACY, chromatic_number_exact, greedy_coloring, max_clique)
from .partition import (Partition, WHEEL_FREE_KIND, partition_by_t5, partition_by_y5,
                        partition_wheel_free, validate_partition)
from .wheels import (PaletteLedger, WheelColoring, color_components, color_piece,
                     color_with_t5, color_with_y5, split_class, _finish)

FORMAT_VERSION = 1

T5_WHEEL = "T5_WHEEL"
Y5_WHEEL = "Y5_WHEEL"
WHEEL_FREE = "WHEEL_FREE"
NO_C5_BASE = "NO_C5_BASE"
PERFECT_FALLBACK_UNUSED = "PERFECT_FALLBACK_UNUSED"
STRATEGIES = (T5_WHEEL, Y5_WHEEL, WHEEL_FREE, NO_C5_BASE, PERFECT_FALLBACK_UNUSED)
_PRIORITY = {T5_WHEEL: 0, Y5_WHEEL: 1, WHEEL_FREE: 2, NO_C5_BASE: 3}
_WITNESS_TAG = {T5_WHEEL: T5WHEEL, Y5_WHEEL: Y5WHEEL, WHEEL_FREE: C5}


# -- wheel-free case ------------------------------------------------------------

@dataclass
class WheelFreeLedger:
    A: frozenset
    B1: frozenset
    B2: frozenset
    D: frozenset
    W: frozenset
    S1: frozenset
    S0: frozenset
    R1_0: frozenset
    R1_1: frozenset
    w: Optional[int] = None
    s1_shapes: list = field(default_factory=list)


def color_wheel_free(g: Graph, part: Partition, omega: int) -> WheelColoring:
    """omega+3 colors around an induced C5 when the graph has no 5-wheel.

    A = R1 + R3 + (P_i, i != 4) + T is paw-free (all adjacent to v2); B1 = R2 + R5,
    B2 = R4 and D = P4 are stable. S splits into S1 (with a neighbour in
    W = T + all P_i) and S0. S1 lies in the neighbourhood of a single w in W
    and is colored from c3..c_{omega+2}; each component of S0 avoids the
    colors of the S1 vertices it sees.
    """
    if part.kind != WHEEL_FREE_KIND:
        raise PreconditionViolation(f"expected a wheel-free partition, got {part.kind}")
    p_not4 = part.union("P1", "P2", "P3", "P5", "T")
    r1 = split_class(g, "R1", part["R1"], p_not4)
    a = part["R1"] | part["R3"] | p_not4
    w_set = part.union("T", "P1", "P2", "P3", "P4", "P5")
    s = part["S"]
    s1 = frozenset(u for u in s if g.adj[u] & w_set)
    book = WheelFreeLedger(A=a, B1=part.union("R2", "R5"), B2=part["R4"], D=part["P4"], W=w_set,
                           S1=s1, S0=s - s1, R1_0=r1.second, R1_1=r1.first)

    ledger = PaletteLedger(omega)
    top = ledger.extra
    ledger.assign("A", color_piece(g, a, p_not4 | r1.second, r1.first, label="wf-A"),
                  range(1, omega + 1))
    ledger.assign_stable(g, "B1", book.B1, top[0])
    ledger.assign_stable(g, "B2", book.B2, top[1])
    ledger.assign_stable(g, "D", book.D, top[2])

    if len(s1) == 1:
        ledger.assign("S1", {min(s1): top[0]}, (top[0],))
    elif s1:
        w = max(sorted(w_set), key=lambda u: len(g.adj[u] & s1))
        book.w = w
        if not s1 <= g.adj[w]:
            z = min(s1 - g.adj[w])
            raise ClaimViolation(f"vertex {w} has most S1-neighbours but misses {z}",
                                 rule="wf/w-complete-to-S1", vertices=(w, z))
        for comp in connected_components(g, within=s1):
            sub, _ = induced_subgraph(g, comp)
            try:
                shape = classify_paw_free(sub)
            except OutsideClass as exc:
                raise ClaimViolation(f"S1 component {sorted(comp)} is not paw-free",
                                     rule="wf/S1-paw-free", vertices=tuple(sorted(comp))) from exc
            parts = shape.parts if shape.tag == COMPLETE_MULTIPARTITE else ()
            book.s1_shapes.append((comp, shape.tag, tuple(frozenset(sorted(comp)[i] for i in p)
                                                          for p in parts)))
        color_components(g, ledger, "S1", s1, range(3, omega + 3))

    for comp in connected_components(g, within=book.S0):
        if len(comp) >= 2:
            _check_one_part(g, book, comp)
        touches_tf = any(tag != COMPLETE_MULTIPARTITE and any(g.adj[v] & c for v in comp)
                         for c, tag, _ in book.s1_shapes)
        order = (list(range(1, omega + 4)) if touches_tf
                 else list(range(3, omega + 4)) + [1, 2])
        color_components(g, ledger, "S0", comp, order, singleton=top[2])
    return _finish(g, ledger, "R1-nonempty" if part["R1"] else "no-R", r1, book=book)


def _check_one_part(g: Graph, book: WheelFreeLedger, comp: frozenset):
    for c, tag, parts in book.s1_shapes:
        if tag != COMPLETE_MULTIPARTITE:
            continue
        hit = [min(p) for p in parts if any(g.adj[v] & p for v in comp)]
        if len(hit) > 1:
            raise ClaimViolation(f"S0 component {sorted(comp)} meets several parts of S1",
                                 rule="wf/S0-meets-one-part", vertices=tuple(hit))


# -- certificates -------------------------------------------------------------------

@dataclass
class ColorOptions:
    verify_class: bool = False
    validate_partitions: bool = False
    exact_chi: bool = False


@dataclass
class ComponentReport:
    vertices: tuple[int, ...]
    strategy: str
    omega: int
    colors_used: int
    witness: tuple[int, ...] = ()
    permutation: tuple[int, ...] = ()
    case: str = ""
    violations: list = field(default_factory=list)


@dataclass
class ColoringCertificate:
    n: int
    m: int
    strategy: Optional[str]
    witness: tuple[int, ...]
    relabeling: dict
    omega: int
    omega_witness: tuple[int, ...]
    bound: int
    colors_used: int
    coloring: tuple[int, ...]
    class_check: Union[dict, str]
    verified: bool
    diagnosis: Optional[dict] = None
    components: list = field(default_factory=list)
    chi: Optional[int] = None
    format_version: int = FORMAT_VERSION

    def to_json(self) -> dict:
        doc = {
            "format_version": self.format_version,
            "n": self.n,
            "m": self.m,
            "strategy": self.strategy,
            "witness": list(self.witness),
            "relabeling": self.relabeling,
            "omega": self.omega,
            "omega_witness": list(self.omega_witness),
            "bound": self.bound,
            "colors_used": self.colors_used,
            "coloring": list(self.coloring),
            "class_check": self.class_check,
            "verified": self.verified,
        }
        if self.diagnosis is not None:
            doc["diagnosis"] = self.diagnosis
        return doc

    def dumps(self) -> str:
        return canonical_json(self.to_json())


def canonical_json(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _diagnose(g: Graph, exc: Exception, component: tuple[int, ...]) -> dict:
    """Describe a failed claim; look for the forbidden pattern that explains it."""
    sub, index = induced_subgraph(g, component)
    back = {i: v for v, i in index.items()}
    found = None
    for tag in (P5, HVN, T5WHEEL):
        w = find_induced(sub, tag)
        if w is not None:
            found = Witness(tag, tuple(back[i] for i in w.vertices))
            break
    local = getattr(exc, "vertices", ()) or ()
    return {
        "rule": getattr(exc, "rule", None) or type(exc).__name__,
        "message": str(exc),
        "vertices": [back.get(v, v) for v in local],
        "pattern": found.pattern if found else None,
        "pattern_witness": list(found.vertices) if found else [],
        "outside_class": found is not None,
    }


def _color_component(sub: Graph, opts: ColorOptions):
    """Return (strategy, local colors, witness, permutation, case, violations)."""
    omega = max_clique(sub).size
    w = find_induced(sub, T5WHEEL)
    if w is not None:
        part = partition_by_t5(sub, w)
        strategy, colorer = T5_WHEEL, color_with_t5
    else:
        w = find_induced(sub, Y5WHEEL)
        if w is not None:
            part = partition_by_y5(sub, w)
            strategy, colorer = Y5_WHEEL, color_with_y5
        else:
            w = find_induced(sub, C5)
            if w is None:
                return NO_C5_BASE, omega, _base_coloring(sub, omega), (), (), "", []
            part = partition_wheel_free(sub, w)
            strategy, colorer = WHEEL_FREE, color_wheel_free
    violations = validate_partition(part) if opts.validate_partitions else []
    if violations:
        v = violations[0]
        raise ClaimViolation(f"partition check failed: {v}", rule=v.rule, vertices=v.vertices)
    result = colorer(sub, part, omega)
    return strategy, omega, result.colors, w.vertices, part.permutation, result.case, violations


def _base_coloring(sub: Graph, omega: int) -> dict[int, int]:
    try:
        res = chromatic_number_exact(sub, upper_hint=omega + 1)
    except HintInfeasible as exc:
        raise ClaimViolation(f"component without an induced C5 needs more than omega+1={omega + 1} colors",
                             rule="base/omega-plus-one") from exc
    return {v: c for v, c in enumerate(res.coloring)}


def _compact(colors: dict[int, int]) -> dict[int, int]:
    rank = {c: i + 1 for i, c in enumerate(sorted(set(colors.values())))}
    return {v: rank[c] for v, c in colors.items()}


def color_graph(g: Graph, options: Optional[ColorOptions] = None) -> ColoringCertificate:
    """Color every component by the strongest applicable strategy and certify the result."""
    opts = options or ColorOptions()
    report: Union[dict, str] = "skipped"
    diagnosis = None
    if opts.verify_class:
        cr = check_class(g)
        report = cr.to_json()
        if not cr.in_class:
            tag = P5 if not cr.p5_free else HVN
            diagnosis = {"rule": "input-class", "message": f"graph contains an induced {tag}",
                         "vertices": [], "pattern": tag,
                         "pattern_witness": list(cr.witnesses[tag].vertices), "outside_class": True}

    clique = max_clique(g)
    omega = clique.size
    coloring: dict[int, int] = {}
    comps: list[ComponentReport] = []
    for comp in connected_components(g):
        sub, index = induced_subgraph(g, comp)
        back = [v for v, _ in sorted(index.items(), key=lambda kv: kv[1])]
        if diagnosis is None:
            try:
                strategy, lw, local, wit, perm, case, _ = _color_component(sub, opts)
            except (OutsideClass, PreconditionViolation, InternalInconsistency) as exc:
                diagnosis = _diagnose(g, _lift(exc, back), tuple(sorted(comp)))
                strategy, lw, local, wit, perm, case = None, max_clique(sub).size, None, (), (), ""
        else:
            strategy, lw, local, wit, perm, case = None, max_clique(sub).size, None, (), (), ""
        if local is None:
            local = {v: c for v, c in enumerate(greedy_coloring(sub, DEGENERACY))}
        local = _compact(local)
        for i, c in local.items():
            coloring[back[i]] = c
        comps.append(ComponentReport(tuple(back), strategy, lw, len(set(local.values())),
                                     tuple(back[i] for i in wit), tuple(perm), case))

    strategy, witness, perm = None, (), ()
    ranked = [c for c in comps if c.strategy is not None]
    if diagnosis is None and ranked:
        best = min(ranked, key=lambda c: _PRIORITY[c.strategy])
        strategy, witness, perm = best.strategy, best.witness, best.permutation
    col = tuple(coloring[v] for v in range(g.n))
    used = len(set(col))
    cert = ColoringCertificate(
        n=g.n, m=g.m, strategy=strategy, witness=witness,
        relabeling={"applied": bool(perm) and perm != tuple(range(len(perm))),
                    "permutation": list(perm)},
        omega=omega, omega_witness=clique.witness, bound=omega + 3, colors_used=used,
        coloring=col, class_check=report, verified=False, diagnosis=diagnosis, components=comps)
    cert.verified = diagnosis is None and _self_check(g, cert)
    if opts.exact_chi:
        cert.chi = chromatic_number_exact(g, upper_hint=max(used, 1) if g.n else None).chi
    return cert


def _lift(exc: Exception, back: list[int]) -> Exception:
    """Rewrite the vertex ids carried by ``exc`` from component to graph ids."""
    vs = getattr(exc, "vertices", None)
    if vs:
        exc.vertices = tuple(back[v] if 0 <= v < len(back) else v for v in vs)
    return exc


def _self_check(g: Graph, cert: ColoringCertificate) -> bool:
    if any(cert.coloring[u] == cert.coloring[v] for u, v in g.edges):
        return False
    if cert.colors_used > cert.bound:
        return False
    return all(c.colors_used <= c.omega + 1 for c in cert.components if c.strategy == NO_C5_BASE)


# -- independent verification ---------------------------------------------------

@dataclass
class VerifyReport:
    ok: bool
    problems: list[str]
    proper: bool = True
    bad_edge: Optional[tuple[int, int]] = None
    omega_checked: bool = False

    def to_json(self) -> dict:
        return {"ok": self.ok, "problems": self.problems, "proper": self.proper,
                "bad_edge": list(self.bad_edge) if self.bad_edge else None,
                "omega_checked": self.omega_checked}


def verify_certificate(g: Graph, cert, check_omega: bool = True) -> VerifyReport:
    """Re-check a certificate (object or parsed JSON) against ``g`` from scratch."""
    doc = cert.to_json() if isinstance(cert, ColoringCertificate) else dict(cert)
    if doc.get("n") != g.n:
        raise GraphError(f"certificate is for n={doc.get('n')}, graph has n={g.n}")
    problems = []
    col = list(doc.get("coloring", []))
    if len(col) != g.n:
        problems.append(f"coloring has {len(col)} entries for {g.n} vertices")
        return VerifyReport(False, problems, proper=False)
    if any(not isinstance(c, int) or c < 1 for c in col):
        problems.append("colors must be positive integers")
    bad = next(((u, v) for u, v in g.edges if col[u] == col[v]), None)
    if bad:
        problems.append(f"edge {bad} is monochromatic (color {col[bad[0]]})")
    used = len(set(col))
    if doc.get("colors_used") != used:
        problems.append(f"colors_used={doc.get('colors_used')} but {used} distinct colors appear")
    omega = doc.get("omega")
    if doc.get("m") != g.m:
        problems.append(f"m={doc.get('m')} but graph has {g.m} edges")
    if doc.get("bound") != (omega or 0) + 3:
        problems.append(f"bound {doc.get('bound')} is not omega+3")
    if used > (omega or 0) + 3:
        problems.append(f"{used} colors exceed omega+3={omega + 3}")
    ow = list(doc.get("omega_witness", []))
    if len(ow) != omega or len(set(ow)) != len(ow) or any(not 0 <= v < g.n for v in ow) \
            or not is_clique(g, ow):
        problems.append(f"omega_witness {ow} is not a clique of size {omega}")
    checked = False
    if check_omega:
        try:
            true_omega = max_clique(g).size
            checked = True
            if true_omega != omega:
                problems.append(f"omega={omega} but the exact clique number is {true_omega}")
        except CapExceeded:
            pass
    strategy = doc.get("strategy")
    wit = tuple(doc.get("witness", []))
    if strategy in _WITNESS_TAG:
        if not verify_witness(g, Witness(_WITNESS_TAG[strategy], wit)):
            problems.append(f"witness {list(wit)} is not an induced {_WITNESS_TAG[strategy]}")
    elif strategy == NO_C5_BASE:
        if wit:
            problems.append("NO_C5_BASE certificates carry no witness")
        if used > (omega or 0) + 1:
            problems.append(f"NO_C5_BASE coloring uses {used} > omega+1 colors")
    elif strategy is not None:
        problems.append(f"unknown strategy {strategy!r}")
    if doc.get("verified") and problems:
        problems.append("certificate claims verified=true")
    return VerifyReport(not problems, problems, proper=bad is None, bad_edge=bad,
                        omega_checked=checked)
