"""Print strict-chain certificates for m = 1..M and optionally dump them as JSON.

    python scripts/acc_chain.py 8 --out chain.json
"""

import argparse
import json

from diffmix.chain import acc_chain_experiment


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("m_max", type=int)
    ap.add_argument("--out")
    args = ap.parse_args()
    certs = acc_chain_experiment(args.m_max)
    print(f"{'m':>3} {'bound':>12} {'separator Eords':>28}  verdict")
    for c in certs:
        print(f"{c.m:>3} {c.max_eord_bound:>12} {str(c.separator_eords):>28}  "
              f"{c.slice.verdict} ({c.slice.reason['kind']})")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([c.to_dict() for c in certs], fh, indent=2)


if __name__ == "__main__":
    main()
