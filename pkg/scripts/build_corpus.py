"""Generate the default seeded corpus and run it; prints the summary table.

    python scripts/build_corpus.py out/corpus --seed 2024 --jobs 1
"""

import argparse
import os
import sys
import time

from pentachrome.corpus import CorpusConfig, CorpusOptions, build_corpus, list_graph_files, run_corpus


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("dir")
    ap.add_argument("--seed", type=int, default=CorpusConfig().seed)
    ap.add_argument("--max-n", type=int, default=CorpusConfig().max_n)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--chi-cap", type=int, default=16)
    ap.add_argument("--no-run", action="store_true", help="only write the graph files")
    args = ap.parse_args(argv)

    if os.path.isdir(args.dir) and list_graph_files(args.dir):
        sys.exit(f"{args.dir} already holds graph files")
    t0 = time.perf_counter()
    paths = build_corpus(args.dir, CorpusConfig(seed=args.seed, max_n=args.max_n))
    print(f"wrote {len(paths)} graphs in {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    if args.no_run:
        return 0
    summary = run_corpus(args.dir, CorpusOptions(jobs=args.jobs, chi_cap=args.chi_cap))
    sys.stdout.write(summary.table())
    return summary.exit_code


if __name__ == "__main__":
    sys.exit(main())
