"""Check the Hitting Set equivalence on random instances and report the answer mix.

    python scripts/hardness_sweep.py --instances 300 --max-universe 6 --max-sets 6
"""

import argparse
import random
from collections import Counter

from ksink import brute_force_hitting_set, from_hitting_set, solve_exact_threshold
from ksink.corpus import random_hitting_set


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--instances", type=int, default=300)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-universe", type=int, default=6)
    parser.add_argument("--max-sets", type=int, default=6)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    outcomes = Counter()
    for _ in range(args.instances):
        hs = random_hitting_set(rng, args.max_universe, args.max_sets)
        left = brute_force_hitting_set(hs)
        right = solve_exact_threshold(from_hitting_set(hs), 1)
        outcomes[(left, right)] += 1
        if left != right:
            print("MISMATCH", hs)
    for (left, right), n in sorted(outcomes.items()):
        print(f"hitting set {'yes' if left else 'no ':>3} | sinks within 1: {'yes' if right else 'no ':>3} | {n}")


if __name__ == "__main__":
    main()
