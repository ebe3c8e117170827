"""Command line entry point: ``pentachrome <command> ...``.

Exit codes: 0 success, 1 bound or properness failure, 2 input outside the
class, 3 unreadable input or bad arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .corpus import CorpusConfig, CorpusOptions, build_corpus, list_graph_files, run_corpus
from .detectors import check_class
from .errors import CapExceeded, GraphError, HintInfeasible, PentachromeError
from .formats import emit, normalize_format, read_graph
from .generators import KINDS, GenerationFailed, GenSpec, generate
from .oracles import chromatic_number_exact, max_clique
from .pipeline import ColorOptions, canonical_json, color_graph, verify_certificate

OK, BOUND_FAIL, OUTSIDE_CLASS, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str, fmt: str = "auto"):
    try:
        return read_graph(path, normalize_format(fmt) or "auto").graph
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _cmd_check(args) -> int:
    g = _load(args.file, args.format)
    report = check_class(g)
    if args.json:
        doc = report.to_json()
        doc["witnesses"] = {k: list(w.vertices) for k, w in sorted(report.witnesses.items())}
        print(canonical_json(doc))
    else:
        print(f"n={g.n} m={g.m}")
        print(f"p5_free: {str(report.p5_free).lower()}")
        print(f"hvn_free: {str(report.hvn_free).lower()}")
        for tag, w in sorted(report.witnesses.items()):
            print(f"{tag} witness: {' '.join(map(str, w.vertices))}")
    return OK if report.in_class else OUTSIDE_CLASS


def _cmd_color(args) -> int:
    g = _load(args.file, args.format)
    cert = color_graph(g, ColorOptions(verify_class=args.verify_class, exact_chi=args.exact_chi))
    if args.cert:
        with open(args.cert, "w") as fh:
            fh.write(cert.dumps() + "\n")
    print(f"strategy: {cert.strategy or '-'}")
    print(f"omega: {cert.omega}")
    print(f"colors_used: {cert.colors_used} (bound {cert.bound})")
    if cert.chi is not None:
        print(f"chi: {cert.chi}")
    print(f"verified: {str(cert.verified).lower()}")
    if not args.cert:
        print("coloring: " + " ".join(map(str, cert.coloring)))
    if cert.diagnosis is not None:
        d = cert.diagnosis
        print(f"diagnosis: {d['rule']}: {d['message']}")
        if d.get("pattern"):
            print(f"{d['pattern']} witness: {' '.join(map(str, d['pattern_witness']))}")
        return OUTSIDE_CLASS if d.get("outside_class") else BOUND_FAIL
    return OK if cert.verified else BOUND_FAIL


def _cmd_verify(args) -> int:
    g = _load(args.graph, args.format)
    try:
        with open(args.cert) as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as exc:
        raise InputError(f"{args.cert}: {exc}") from exc
    try:
        report = verify_certificate(g, doc, check_omega=not args.no_omega)
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    if report.ok:
        print("certificate ok")
        return OK
    for p in report.problems:
        print(f"FAIL: {p}")
    return BOUND_FAIL


def _cmd_oracle(args) -> int:
    g = _load(args.file, args.format)
    if args.omega:
        res = max_clique(g)
        print(f"omega: {res.size}")
        print("clique: " + " ".join(map(str, res.witness)))
    else:
        res = chromatic_number_exact(g)
        print(f"chi: {res.chi}")
        print("coloring: " + " ".join(map(str, res.coloring)))
    return OK


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"--parts expects comma-separated integers, got {text!r}") from None


def _cmd_gen(args) -> int:
    kind = args.kind.upper()
    if kind not in KINDS:
        raise InputError(f"kind must be one of {', '.join(k.lower() for k in KINDS)}")
    spec = GenSpec(kind, parts=_parse_parts(args.parts) if args.parts else (), n=args.n or 0,
                   p=args.p, seed=args.seed, wheel=args.wheel.upper(), augment=args.augment,
                   max_tries=args.max_tries)
    try:
        doc = generate(spec)
    except GenerationFailed as exc:
        print(f"generation failed after {exc.tries} tries: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except GraphError as exc:
        raise InputError(str(exc)) from exc
    fmt = normalize_format(args.format)
    if args.out:
        from .formats import detect_format
        fmt = fmt or detect_format(b"", args.out)
        with open(args.out, "wb") as fh:
            fh.write(emit(doc, fmt))
    else:
        sys.stdout.write(emit(doc, fmt).decode())
    return OK


def _cmd_corpus(args) -> int:
    if args.seed is not None:
        if os.path.isdir(args.dir) and list_graph_files(args.dir):
            raise InputError(f"{args.dir} already holds graph files; use an empty directory with --seed")
        build_corpus(args.dir, CorpusConfig(seed=args.seed))
    if not os.path.isdir(args.dir):
        raise InputError(f"{args.dir}: not a directory")
    summary = run_corpus(args.dir, CorpusOptions(jobs=args.jobs, verify_class=args.verify_class,
                                                 chi_cap=args.chi_cap))
    sys.stdout.write(summary.table(timing=not args.no_timing))
    for r in summary.rows:
        if r.status != "ok":
            print(f"{r.status}: {r.name}: {r.detail}", file=sys.stderr)
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pentachrome",
                                 description="Certified omega+3 colorings of (P5, HVN)-free graphs.")
    sub = ap.add_subparsers(dest="command", required=True)
    fmt_help = "input format (default: by extension, then by content)"

    p = sub.add_parser("check", help="test for induced P5 and HVN")
    p.add_argument("file")
    p.add_argument("--format", default="auto", choices=["auto", "g6", "dimacs", "edges"], help=fmt_help)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("color", help="color a graph and emit a certificate")
    p.add_argument("file")
    p.add_argument("--format", default="auto", choices=["auto", "g6", "dimacs", "edges"], help=fmt_help)
    p.add_argument("--verify-class", action="store_true", help="check P5/HVN-freeness first")
    p.add_argument("--cert", help="write the JSON certificate here")
    p.add_argument("--exact-chi", action="store_true", help="also compute the exact chromatic number")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="re-check a certificate against its graph")
    p.add_argument("graph")
    p.add_argument("cert")
    p.add_argument("--format", default="auto", choices=["auto", "g6", "dimacs", "edges"], help=fmt_help)
    p.add_argument("--no-omega", action="store_true", help="skip the exact clique re-check")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exact clique number or chromatic number")
    p.add_argument("file")
    p.add_argument("--format", default="auto", choices=["auto", "g6", "dimacs", "edges"], help=fmt_help)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--omega", action="store_true")
    which.add_argument("--chi", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("gen", help="generate an in-class graph")
    p.add_argument("kind", help="five_ring | complete_multipartite | random_in_class | wheel_seeded")
    p.add_argument("--parts", help="part sizes, e.g. 2,1,1,1,1")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--wheel", default="T5", help="T5, Y5 or C5 (wheel_seeded)")
    p.add_argument("--augment", type=int, default=10, help="vertices added to the wheel")
    p.add_argument("--max-tries", type=int, default=10000)
    p.add_argument("--format", default=None, choices=["g6", "dimacs", "edges"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("corpus", help="run color+verify over a directory of graphs")
    p.add_argument("dir")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, help="first generate the default corpus into DIR")
    p.add_argument("--verify-class", action="store_true")
    p.add_argument("--chi-cap", type=int, default=16, help="exact chi for graphs up to this size")
    p.add_argument("--no-timing", action="store_true", help="omit the timing column")
    p.set_defaults(func=_cmd_corpus)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    try:
        return args.func(args)
    except (InputError, CapExceeded, HintInfeasible) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except PentachromeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
