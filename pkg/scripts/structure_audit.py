"""Run every structural partition check over a directory of graphs.

Prints, per rule family, how many partitions were checked and how many
violations were found, and lists the first few violations.
"""

import argparse
import sys
from collections import Counter

from pentachrome.corpus import list_graph_files
from pentachrome.detectors import C5, T5WHEEL, Y5WHEEL, find_induced
from pentachrome.errors import PartitionViolation
from pentachrome.formats import read_graph
from pentachrome.graph import connected_components, induced_subgraph
from pentachrome.partition import (partition_by_c5, partition_by_t5, partition_by_y5,
                                   partition_wheel_free, validate_partition)


def partitions(g):
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        c5 = find_induced(sub, C5)
        if c5 is None:
            continue
        yield partition_by_c5, sub, c5
        t5 = find_induced(sub, T5WHEEL)
        y5 = None if t5 else find_induced(sub, Y5WHEEL)
        if t5:
            yield partition_by_t5, sub, t5
        elif y5:
            yield partition_by_y5, sub, y5
        else:
            yield partition_wheel_free, sub, c5


def main(argv=None):
    ap = argparse.ArgumentParser(description="audit partition structure over a corpus")
    ap.add_argument("dir")
    ap.add_argument("--show", type=int, default=5)
    args = ap.parse_args(argv)

    checked, rules, shown = Counter(), Counter(), []
    for path in list_graph_files(args.dir):
        g = read_graph(path).graph
        for build, sub, witness in partitions(g):
            try:
                part = build(sub, witness)
                found = validate_partition(part)
                kind = part.kind
            except PartitionViolation as exc:
                found, kind = [exc], "trace"
            checked[kind] += 1
            for v in found:
                rules[getattr(v, "rule", "?")] += 1
                if len(shown) < args.show:
                    shown.append(f"{path}: {v}")
    for kind, k in sorted(checked.items()):
        print(f"{kind:<11} {k:5d} partitions")
    print(f"violations: {sum(rules.values())}")
    for rule, k in sorted(rules.items()):
        print(f"  {rule}: {k}")
    for line in shown:
        print(line)
    return 1 if rules else 0


if __name__ == "__main__":
    sys.exit(main())
