"""Spot-check realizability on random minimal presentations over t >= 4."""

import argparse
import random
from collections import Counter

from tatemassey.group_algebra import GroupConfig
from tatemassey.massey import random_minimal_presentation, realizable_summand


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--max-size", type=int, default=4)
    args = p.parse_args()
    cfg = GroupConfig(args.t)
    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.samples):
        A = random_minimal_presentation("4+", rng, args.max_size)
        rep = realizable_summand(A, cfg, "m''")
        cf = rep.closed_form
        tally["closed form"] += cf["mprime_equals_AV_plus_WC"]
        tally["m~ = 0"] += cf["mtilde_zero"]
        tally["exact"] += rep.exact_AB["exact"] and rep.exact_BC["exact"]
        tally["realizable (m)"] += realizable_summand(A, cfg, "m").summand_of_realizable
    for k, n in tally.items():
        print(f"{k:16s} {n}/{args.samples}")


if __name__ == "__main__":
    main()
