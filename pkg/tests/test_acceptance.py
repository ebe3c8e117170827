"""End-to-end acceptance checks; each test prints one PASS/FAIL line."""

import filecmp
import json
import random
import time

import networkx as nx
import pytest

from conftest import p5_k3_free_graphs, proper_3_colorings, random_graph, valid_prescriptions
from pentachrome.base import (BIPARTITE, COMPLETE_MULTIPARTITE, FIVE_RING, classify_paw_free,
                              color_triangle_free_prescribed, multipartite_parts,
                              recognize_p5_k3_free)
from pentachrome.corpus import CorpusConfig, CorpusOptions, build_corpus, run_corpus
from pentachrome.detectors import (C5, P5, PATTERNS, PAW, T5WHEEL, Y5WHEEL, brute_force_contains,
                                   find_induced, pattern_graph)
from pentachrome.errors import OutsideClass
from pentachrome.formats import read_graph
from pentachrome.graph import (Graph, bits, complete_graph, connected_components,
                               induced_subgraph, is_stable_set)
from pentachrome.partition import (partition_by_c5, partition_by_t5, partition_by_y5,
                                   partition_wheel_free, validate_partition)
from pentachrome.pipeline import NO_C5_BASE, verify_certificate

CONFIG = CorpusConfig()


@pytest.fixture(scope="module")
def corpus(tmp_path_factory):
    root = tmp_path_factory.mktemp("corpus")
    t0 = time.perf_counter()
    paths = build_corpus(str(root), CONFIG)
    t1 = time.perf_counter()
    summary = run_corpus(str(root), CorpusOptions(chi_cap=16))
    t2 = time.perf_counter()
    graphs = {p.rsplit("/", 1)[1]: read_graph(p).graph for p in paths}
    return {"dir": root, "summary": summary, "graphs": graphs,
            "gen_seconds": t1 - t0, "run_seconds": t2 - t1}


def test_criterion_1_main_bound(corpus, report):
    rows = corpus["summary"].rows
    bad = []
    for r in rows:
        g = corpus["graphs"][r.name]
        cert = json.loads(r.certificate)
        ok = (r.status == "ok" and cert["verified"] and r.colors_used <= r.omega + 3
              and verify_certificate(g, cert).ok)
        if not ok:
            bad.append(r.name)
    kinds = {name.split("-", 2)[1] for name in corpus["graphs"]}
    seconds = corpus["gen_seconds"] + corpus["run_seconds"]
    ok = (not bad and len(rows) >= 500 and max(r.n for r in rows) <= 60
          and {"five_ring", "complete_multipartite", "random", "wheel"} <= kinds and seconds < 300)
    report.line(1, ok, f"{len(rows)} graphs, {len(bad)} over omega+3 or unverified, "
                       f"max n {max(r.n for r in rows)}, {seconds:.0f}s")
    assert ok, bad[:5]


def test_criterion_2_exact_chi(corpus, report):
    small = [r for r in corpus["summary"].rows if r.n <= 16]
    bad = [r.name for r in small
           if r.chi is None or not (r.chi <= r.colors_used <= r.omega + 3)
           or r.chi > max(min(16, r.omega + 3), r.omega + 1) or r.status != "ok"]
    gaps = max(r.chi - r.omega for r in small)
    ok = not bad and len(small) > 100
    report.line(2, ok, f"{len(small)} graphs with n<=16, {len(bad)} violations, "
                       f"largest chi-omega gap {gaps}")
    assert ok, bad[:5]


def _partitions(g: Graph):
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        c5 = find_induced(sub, C5)
        if c5 is None:
            continue
        yield partition_by_c5(sub, c5)
        t5 = find_induced(sub, T5WHEEL)
        if t5 is not None:
            yield partition_by_t5(sub, t5)
            continue
        y5 = find_induced(sub, Y5WHEEL)
        if y5 is not None:
            yield partition_by_y5(sub, y5)
        else:
            yield partition_wheel_free(sub, c5)


def test_criterion_3_structure(corpus, report):
    counts, bad = {}, []
    for name, g in corpus["graphs"].items():
        for part in _partitions(g):
            counts[part.kind] = counts.get(part.kind, 0) + 1
            found = validate_partition(part)
            if found:
                bad.append((name, str(found[0])))
    ok = not bad and set(counts) == {"C5", "T5", "Y5", "WHEEL_FREE"}
    report.line(3, ok, f"partitions checked {dict(sorted(counts.items()))}, {len(bad)} violations")
    assert ok, bad[:5]


def test_criterion_4_prescribed_three_coloring(report):
    t0 = time.perf_counter()
    graphs = p5_k3_free_graphs(7)
    pairs = disagreements = 0
    for g in graphs:
        cols = proper_3_colorings(g)
        for s, t in valid_prescriptions(g):
            pairs += 1
            exists = any(s & ~m1 == 0 and t & ~m2 == 0 for m1, m2 in cols)
            try:
                c = color_triangle_free_prescribed(g, bits(s), bits(t))
                got = (c.is_proper(g) and max(c.used, default=1) <= 3
                       and all(c.colors[v] == 1 for v in bits(s))
                       and all(c.colors[v] == 2 for v in bits(t)))
            except OutsideClass:
                got = False
            disagreements += got != exists
    seconds = time.perf_counter() - t0
    ok = disagreements == 0 and seconds < 120
    report.line(4, ok, f"{len(graphs)} graphs up to isomorphism, {pairs} (S,T) pairs, "
                       f"{disagreements} disagreements, {seconds:.1f}s")
    assert ok


def test_criterion_5_detectors(report):
    rng = random.Random(20240501)
    densities = (0.25, 0.5, 0.75)
    disagreements = checked = 0
    for i in range(1000):
        g = random_graph(rng, rng.randint(0, 10), densities[i % 3])
        for tag in PATTERNS:
            w = find_induced(g, tag)
            ref = brute_force_contains(g, pattern_graph(tag))
            disagreements += (w.vertices if w else None) != ref
            checked += 1
    ok = disagreements == 0
    report.line(5, ok, f"1000 graphs x {len(PATTERNS)} patterns, {disagreements} disagreements")
    assert ok


def _small_graphs():
    """Every graph on <= 7 vertices up to isomorphism, plus 2000 seeded 8-vertex graphs."""
    for h in nx.graph_atlas_g()[1:]:
        g = Graph(h.number_of_nodes(), list(h.edges()))
        yield g
    rng = random.Random(88)
    for i in range(2000):
        yield random_graph(rng, 8, (0.2, 0.35, 0.5, 0.65)[i % 4])


def test_criterion_6_structure_theorems(report):
    k3 = complete_graph(3)
    paw = pattern_graph(PAW)
    p5 = pattern_graph(P5)
    disagreements = connected = 0
    for g in _small_graphs():
        if len(connected_components(g)) != 1:
            continue
        connected += 1
        has_k3 = brute_force_contains(g, k3) is not None
        paw_free = brute_force_contains(g, paw) is None
        multipartite = multipartite_parts(g) is not None
        disagreements += paw_free != (multipartite or not has_k3)
        if paw_free:
            tag = classify_paw_free(g).tag
            disagreements += (tag == COMPLETE_MULTIPARTITE) != multipartite
        p5_k3_free = not has_k3 and brute_force_contains(g, p5) is None
        if p5_k3_free:
            shape = recognize_p5_k3_free(g)
            disagreements += not all(is_stable_set(g, p) for p in shape.parts)
            disagreements += shape.tag not in (BIPARTITE, FIVE_RING)
        elif not has_k3:
            # triangle-free with an induced P5: recognition must not claim a 5-ring
            try:
                disagreements += recognize_p5_k3_free(g).tag == FIVE_RING
            except OutsideClass:
                pass
    ok = disagreements == 0
    report.line(6, ok, f"{connected} connected graphs on <= 8 vertices, {disagreements} disagreements")
    assert ok


def test_criterion_7_base_case(corpus, report):
    comps = bad = 0
    multipartite = 0
    for r in corpus["summary"].rows:
        g = corpus["graphs"][r.name]
        cert = json.loads(r.certificate)
        col = cert["coloring"]
        for comp in connected_components(g):
            sub, _ = induced_subgraph(g, comp)
            if find_induced(sub, C5) is not None:
                continue
            comps += 1
            multipartite += "complete_multipartite" in r.name
            omega = max(len(c) for c in nx.find_cliques(nx.Graph(sub.edges))) if sub.m else 1
            bad += len({col[v] for v in comp}) > omega + 1
        bad += not r.base_ok
        bad += cert["strategy"] == NO_C5_BASE and r.colors_used > r.omega + 1
    ok = bad == 0 and multipartite >= 100
    report.line(7, ok, f"{comps} C5-free components ({multipartite} complete multipartite), "
                       f"{bad} over omega+1")
    assert ok


def test_criterion_8_determinism(corpus, report, tmp_path):
    build_corpus(str(tmp_path), CONFIG)
    files = sorted(corpus["graphs"])
    match, mismatch, errors = filecmp.cmpfiles(str(corpus["dir"]), str(tmp_path), files,
                                               shallow=False)
    again = run_corpus(str(tmp_path), CorpusOptions(chi_cap=16))
    first = corpus["summary"]
    same_certs = [r.certificate for r in first.rows] == [r.certificate for r in again.rows]
    same_table = first.table(timing=False) == again.table(timing=False)
    ok = len(match) == len(files) and same_certs and same_table
    report.line(8, ok, f"{len(match)}/{len(files)} graph files identical, certificates "
                       f"{'identical' if same_certs else 'differ'}, summary "
                       f"{'identical' if same_table else 'differs'}")
    assert ok
