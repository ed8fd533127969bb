"""Run the bounded shuffle audit over a grid of m and index bounds."""

import argparse

from diffmix.shuffle import lemma34_verify


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-index", type=int, nargs="+", default=[40, 60, 80])
    ap.add_argument("--iters", type=int, default=2)
    ap.add_argument("--extra-degree", type=int, default=1)
    args = ap.parse_args()
    for m in args.m:
        for mi in args.max_index:
            rep = lemma34_verify(m, args.iters, mi, args.extra_degree)
            print(f"m={m} max_index={mi}: {'ok' if rep.ok else 'VIOLATED'} "
                  f"stages={rep.details['stage_sizes']} "
                  f"quadratics={rep.details['quadratics_checked']} "
                  f"{rep.elapsed_ms / 1000:.2f}s")


if __name__ == "__main__":
    main()
