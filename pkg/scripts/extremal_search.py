"""Random search for in-class graphs with a large gap chi - omega.

The upper bound is omega+3; graphs with chi = omega+1 are easy to find
(C5 and its blow-ups), larger gaps are not. The best graph found is
printed as graph6 together with its numbers.
"""

import argparse
import random
import sys

from pentachrome.formats import emit_graph6
from pentachrome.generators import RANDOM_IN_CLASS, WHEEL_SEEDED, GenerationFailed, GenSpec, generate
from pentachrome.oracles import chromatic_number_exact, max_clique
from pentachrome.pipeline import color_graph


def candidates(rng: random.Random, count: int, max_n: int):
    for _ in range(count):
        if rng.random() < 0.7:
            spec = GenSpec(WHEEL_SEEDED, wheel=rng.choice(["T5", "Y5", "C5"]),
                           augment=rng.randint(2, max_n - 6), seed=rng.getrandbits(64))
        else:
            spec = GenSpec(RANDOM_IN_CLASS, n=rng.randint(6, 10), p=rng.choice([0.3, 0.6, 0.85]),
                           seed=rng.getrandbits(64), max_tries=2000)
        try:
            yield generate(spec).graph
        except GenerationFailed:
            continue


def main(argv=None):
    ap = argparse.ArgumentParser(description="search for large chi - omega in the class")
    ap.add_argument("--count", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    rng = random.Random(args.seed)
    best, best_gap, seen = None, -1, 0
    for g in candidates(rng, args.count, args.max_n):
        seen += 1
        omega = max_clique(g).size
        chi = chromatic_number_exact(g).chi
        cert = color_graph(g)
        assert cert.verified and chi <= cert.colors_used <= omega + 3
        if chi - omega > best_gap:
            best, best_gap = (g, omega, chi, cert.colors_used), chi - omega
    if best is None:
        print("no graphs generated")
        return 1
    g, omega, chi, used = best
    print(f"searched {seen} graphs; best chi - omega = {best_gap}")
    print(f"n={g.n} m={g.m} omega={omega} chi={chi} colors_used={used}")
    print(emit_graph6(g).decode().strip())
    return 0


if __name__ == "__main__":
    sys.exit(main())
