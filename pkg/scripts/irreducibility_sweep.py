"""Gram-rank histogram of random degree-2 slice elements for several seeds."""

import argparse

from diffmix.checks import irreducibility_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--m", type=int, default=4)
    ap.add_argument("--shifts", type=int, default=16)
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    args = ap.parse_args()
    for seed in args.seeds:
        rep = irreducibility_sweep(args.samples, args.m, args.shifts, seed)
        print(f"seed={seed}: min rank {rep.details['min_rank']}, "
              f"histogram {rep.details['rank_histogram']}, {len(rep.violations)} violations")


if __name__ == "__main__":
    main()
