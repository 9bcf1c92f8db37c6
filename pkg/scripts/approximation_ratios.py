"""Compare the sampled solver against exhaustive search on random instances.

    python scripts/approximation_ratios.py --instances 200 --seed 1
"""

import argparse
import math
import random
import time
from collections import defaultdict
from fractions import Fraction

from ksink import sample_positions, solve_exact, solve_fptas
from ksink.corpus import CorpusConfig, random_instance
from ksink.documents import dump_instance


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=20261019)
    parser.add_argument("--epsilon", action="append", type=Fraction, help="repeatable; default 1/4 1/2 1")
    parser.add_argument("--max-vertices", type=int, default=8)
    parser.add_argument("--max-edges", type=int, default=12)
    parser.add_argument("--max-transit", type=int, default=6)
    args = parser.parse_args()
    epsilons = args.epsilon or [Fraction(1, 4), Fraction(1, 2), Fraction(1)]
    cfg = CorpusConfig(max_vertices=args.max_vertices, max_edges=args.max_edges, max_transit=args.max_transit)

    rng = random.Random(args.seed)
    ratios = defaultdict(list)
    exact_hits = defaultdict(int)
    oversize = defaultdict(int)
    started = time.perf_counter()
    for _ in range(args.instances):
        inst = random_instance(rng, cfg)
        opt = solve_exact(inst).time
        net = inst.network
        for eps in epsilons:
            got = solve_fptas(inst, eps).time
            if got.time > (1 + eps) * opt.time:
                print(f"VIOLATION eps={eps} fptas={got} exact={opt}\n{dump_instance(inst)}")
            ratios[eps].append(1.0 if opt.time == 0 else got.time / opt.time)
            exact_hits[eps] += got == opt
            if len(sample_positions(net, eps)) > len(net.vertices) + len(net.edges) * math.ceil(1 / eps):
                oversize[eps] += 1

    print(f"{args.instances} instances, seed {args.seed}, {time.perf_counter() - started:.1f}s")
    print(f"{'eps':>6} {'bound':>6} {'mean':>7} {'max':>7} {'optimal':>8} {'|X| over':>9}")
    for eps in epsilons:
        r = ratios[eps]
        print(
            f"{str(eps):>6} {float(1 + eps):>6.3f} {sum(r) / len(r):>7.4f} {max(r):>7.4f} "
            f"{exact_hits[eps]:>8} {oversize[eps]:>9}"
        )


if __name__ == "__main__":
    main()
