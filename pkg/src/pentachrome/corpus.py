"""Seeded benchmark corpora and the batch runner behind ``pentachrome corpus``."""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import PentachromeError
from .formats import EDGE_LIST, GraphDocument, emit, read_graph
from .generators import (COMPLETE_MULTIPARTITE, FIVE_RING, RANDOM_IN_CLASS, WHEEL_SEEDED,
                         GenSpec, generate)
from .oracles import chromatic_number_exact
from .pipeline import ColorOptions, color_graph, verify_certificate

GRAPH_SUFFIXES = (".txt", ".edges", ".g6", ".col", ".dimacs")

# Largest n per edge density at which Erdos-Renyi rejection sampling still
# accepts a few percent of draws (measured; mid densities die out fast).
_RANDOM_MAX_N = {0.1: 12, 0.15: 12, 0.3: 9, 0.5: 8, 0.85: 10, 0.95: 12}


@dataclass(frozen=True)
class CorpusConfig:
    """Composition of the default corpus. Sizes stay at or below ``max_n``."""

    seed: int = 2024
    five_rings: int = 100
    multipartite: int = 100
    random_small: int = 100
    wheel_t5: int = 80
    wheel_y5: int = 60
    wheel_c5: int = 60
    max_n: int = 60
    small_share: float = 0.4   # fraction of each family kept at n <= 16

    @property
    def total(self) -> int:
        return (self.five_rings + self.multipartite + self.random_small
                + self.wheel_t5 + self.wheel_y5 + self.wheel_c5)


def default_specs(config: CorpusConfig = CorpusConfig()) -> list[GenSpec]:
    rng = random.Random(config.seed)
    specs = []

    def small() -> bool:
        return rng.random() < config.small_share

    for _ in range(config.five_rings):
        hi = 3 if small() else config.max_n // 5
        specs.append(GenSpec(FIVE_RING, parts=tuple(rng.randint(1, hi) for _ in range(5))))
    for _ in range(config.multipartite):
        k = rng.randint(1, 8)
        hi = max(1, min(16, 16 // k)) if small() else max(1, config.max_n // k)
        specs.append(GenSpec(COMPLETE_MULTIPARTITE, parts=tuple(rng.randint(1, hi) for _ in range(k))))
    for _ in range(config.random_small):
        p = rng.choice(sorted(_RANDOM_MAX_N))
        specs.append(GenSpec(RANDOM_IN_CLASS, n=rng.randint(5, _RANDOM_MAX_N[p]), p=p,
                             seed=rng.getrandbits(64)))
    for wheel, count in (("T5", config.wheel_t5), ("Y5", config.wheel_y5), ("C5", config.wheel_c5)):
        for _ in range(count):
            top = 10 if small() else config.max_n - 6
            specs.append(GenSpec(WHEEL_SEEDED, wheel=wheel, augment=rng.randint(0, top),
                                 seed=rng.getrandbits(64)))
    return specs


def build_corpus(directory: str, config: CorpusConfig = CorpusConfig()) -> list[str]:
    """Generate the default corpus as canonical edge-list files; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, spec in enumerate(default_specs(config)):
        doc = generate(spec)
        path = os.path.join(directory, f"{i:04d}-{spec.label()}.txt")
        with open(path, "wb") as fh:
            fh.write(emit(doc, EDGE_LIST))
        paths.append(path)
    return paths


@dataclass
class CorpusOptions:
    jobs: int = 1
    verify_class: bool = False
    chi_cap: int = 16
    check_omega: bool = True


@dataclass
class Row:
    name: str
    n: int = 0
    m: int = 0
    omega: int = 0
    colors_used: int = 0
    bound: int = 0
    chi: Optional[int] = None
    strategy: Optional[str] = None
    seconds: float = 0.0
    status: str = "ok"
    detail: str = ""
    certificate: str = ""
    base_ok: bool = True

    def cells(self, timing: bool = True) -> list[str]:
        out = [self.name, str(self.n), str(self.m), str(self.omega), str(self.colors_used),
               str(self.bound), "-" if self.chi is None else str(self.chi),
               self.strategy or "-", self.status]
        if timing:
            out.append(f"{self.seconds:.3f}")
        return out


HEADER = ["graph", "n", "m", "omega", "colors", "bound", "chi", "strategy", "status"]


@dataclass
class CorpusSummary:
    rows: list[Row] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.rows)

    @property
    def exit_code(self) -> int:
        if self.count("bound-fail"):
            return 1
        if self.count("class-violation"):
            return 2
        if self.count("unreadable"):
            return 3
        return 0

    def table(self, timing: bool = True) -> str:
        head = HEADER + (["seconds"] if timing else [])
        body = [r.cells(timing) for r in self.rows]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        fmt = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
        lines = [fmt(head)] + [fmt(b) for b in body]
        tail = (f"{len(self.rows)} graphs: {self.count('ok')} ok, {self.count('bound-fail')} bound "
                f"failures, {self.count('class-violation')} class violations, "
                f"{self.count('unreadable')} unreadable")
        return "\n".join(lines + [tail]) + "\n"


def run_document(doc: GraphDocument, options: CorpusOptions = CorpusOptions()) -> Row:
    g = doc.graph
    start = time.perf_counter()
    cert = color_graph(g, ColorOptions(verify_class=options.verify_class))
    report = verify_certificate(g, cert, check_omega=options.check_omega)
    row = Row(doc.name or "?", g.n, g.m, cert.omega, cert.colors_used, cert.bound,
              strategy=cert.strategy, certificate=cert.dumps())
    row.base_ok = all(c.colors_used <= c.omega + 1 for c in cert.components
                      if c.strategy == "NO_C5_BASE")
    if cert.diagnosis is not None:
        row.status = "class-violation" if cert.diagnosis.get("outside_class") else "bound-fail"
        row.detail = cert.diagnosis.get("message", "")
    elif not report.ok or not cert.verified or not row.base_ok:
        row.status = "bound-fail"
        row.detail = "; ".join(report.problems) or "self-check failed"
    if g.n <= options.chi_cap and row.status != "class-violation":
        row.chi = chromatic_number_exact(g).chi
        if not row.chi <= row.colors_used:
            row.status, row.detail = "bound-fail", f"chi={row.chi} above colors_used"
    row.seconds = time.perf_counter() - start
    return row


def _run_path(args) -> Row:
    path, options = args
    name = os.path.basename(path)
    try:
        doc = read_graph(path)
    except (OSError, PentachromeError, ValueError) as exc:
        return Row(name, status="unreadable", detail=str(exc))
    return run_document(GraphDocument(doc.format, doc.graph, name), options)


def list_graph_files(directory: str) -> list[str]:
    return sorted(os.path.join(directory, f) for f in os.listdir(directory)
                  if f.endswith(GRAPH_SUFFIXES))


def run_corpus(directory: str, options: CorpusOptions = CorpusOptions()) -> CorpusSummary:
    """Color, certify and re-verify every graph file in ``directory`` (sorted by name)."""
    paths = list_graph_files(directory)
    work = [(p, options) for p in paths]
    if options.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=options.jobs) as pool:
            rows = list(pool.map(_run_path, work, chunksize=4))
    else:
        rows = [_run_path(w) for w in work]
    return CorpusSummary(rows)


def run_documents(docs: Iterable[GraphDocument], options: CorpusOptions = CorpusOptions()) -> CorpusSummary:
    return CorpusSummary([run_document(d, options) for d in docs])
