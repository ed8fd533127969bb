"""Command line front end.

Exit codes: 0 verified, 1 violated, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .chain import acc_chain_experiment
from .checks import irreducibility_sweep
from .poly import IndexOverflowError, ParseError, parse
from .quadratic import ContractError
from .report import Report, scan_payload
from .shuffle import ShuffleBounds, ShuffleState, lemma34_verify, run_shuffle
from .slice import degree2_slice_membership
from .witness import (A_fits, eord_distinctness_scan, make_A, make_u,
                      monomial_injectivity_scan, remark32_scan)


class UsageError(Exception):
    pass


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffmix",
        description="Difference polynomials and strict-chain certificates for mixed ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", metavar="PATH",
                       help="write the JSON report to PATH ('-' for stdout)")

    g = sub.add_parser("gen", help="print u(n) or A(n)")
    g.add_argument("--family", choices=["u", "A"], required=True)
    g.add_argument("--n", type=int, required=True)

    c = sub.add_parser("check", help="run a verification")
    csub = c.add_subparsers(dest="check", required=True)
    p = csub.add_parser("remark32", help="power-of-two sum/difference scan")
    p.add_argument("--max", type=int, default=20, dest="max_exp")
    add_json(p)
    p = csub.add_parser("eords", help="measured effective orders of u(0..n-max)")
    p.add_argument("--n-max", type=int, default=20)
    add_json(p)
    p = csub.add_parser("injectivity", help="distinctness of shifted witness monomials")
    p.add_argument("--k-max", type=_nonneg, default=12)
    p.add_argument("--j-max", type=_nonneg, default=64)
    add_json(p)
    p = csub.add_parser("irreducible", help="Gram rank of random degree-2 slice elements")
    p.add_argument("--m", type=_positive, default=4)
    p.add_argument("--shifts", type=_nonneg, default=16)
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--seed", type=_nonneg)
    add_json(p)
    p = csub.add_parser("slice", help="exact degree-2 slice membership")
    p.add_argument("--poly", required=True)
    p.add_argument("--m", type=_positive, required=True)
    add_json(p)
    p = csub.add_parser("lemma34", help="audit quadratics produced by shuffling")
    p.add_argument("--m", type=_positive, default=1)
    p.add_argument("--iters", type=_positive, default=2)
    p.add_argument("--max-index", type=_nonneg, default=40)
    p.add_argument("--extra-degree", type=_nonneg, default=1)
    add_json(p)

    a = sub.add_parser("acc", help="strict ascending chain certificates")
    a.add_argument("--m-max", type=int, required=True)
    add_json(a)

    s = sub.add_parser("shuffle", help="run shuffle stages and audit them")
    s.add_argument("--m", type=_positive, default=1)
    s.add_argument("--iters", type=_nonneg, default=2)
    s.add_argument("--max-index", type=_nonneg, default=40)
    s.add_argument("--extra-degree", type=_nonneg, default=1)
    s.add_argument("--snapshot-dir", type=Path,
                   help="write stage_<n>.txt generator lists here")
    add_json(s)
    return parser


def cmd_gen(args) -> int:
    if args.family == "u":
        if args.n < 0:
            raise UsageError("u is indexed from 0")
        print(make_u(args.n))
    else:
        if args.n < 1:
            raise UsageError("A is indexed from 1")
        print(make_A(args.n))
    return 0


def _scan_report(check: str, scan, params: dict, seed=None) -> Report:
    return Report(check, params, scan_payload(scan), scan.elapsed_ms, seed)


def cmd_check(args) -> Report:
    name = args.check
    if name == "remark32":
        if args.max_exp < 3:
            raise UsageError("--max must be at least 3")
        return _scan_report(name, remark32_scan(args.max_exp), {"max": args.max_exp})
    if name == "eords":
        if args.n_max < 1:
            raise UsageError("--n-max must be at least 1")
        return _scan_report(name, eord_distinctness_scan(args.n_max), {"n_max": args.n_max})
    if name == "injectivity":
        return _scan_report(name, monomial_injectivity_scan(args.k_max, args.j_max),
                            {"k_max": args.k_max, "j_max": args.j_max})
    if name == "irreducible":
        if args.seed is None:
            raise UsageError("check irreducible needs an explicit --seed")
        if not A_fits(args.m):
            raise UsageError("--m too large for the index width")
        scan = irreducibility_sweep(args.samples, args.m, args.shifts, args.seed)
        return _scan_report(name, scan, {"m": args.m, "shifts": args.shifts,
                                         "samples": args.samples}, args.seed)
    if name == "slice":
        t0 = time.perf_counter()
        try:
            q = parse(args.poly)
            cert = degree2_slice_membership(q, args.m)
        except (ParseError, ContractError) as exc:
            raise UsageError(str(exc)) from exc
        item = cert.to_dict()
        item["violation"] = not cert.member
        return Report(name, {"poly": args.poly, "m": args.m}, [item],
                      (time.perf_counter() - t0) * 1000)
    if name == "lemma34":
        scan = lemma34_verify(args.m, args.iters, args.max_index, args.extra_degree)
        return _scan_report(name, scan, {"m": args.m, "iters": args.iters,
                                         "max_index": args.max_index,
                                         "extra_degree": args.extra_degree})
    raise UsageError(f"unknown check {name}")


def cmd_acc(args) -> Report:
    if args.m_max < 1:
        raise UsageError("--m-max must be at least 1")
    t0 = time.perf_counter()
    try:
        certs = acc_chain_experiment(args.m_max)
    except ContractError as exc:
        raise UsageError(str(exc)) from exc
    payload = []
    for cert in certs:
        item = cert.to_dict()
        item["violation"] = not cert.strict or cert.max_eord_bound != item["expected_bound"]
        payload.append(item)
    return Report("acc", {"m_max": args.m_max}, payload, (time.perf_counter() - t0) * 1000)


def cmd_shuffle(args) -> Report:
    t0 = time.perf_counter()
    bounds = ShuffleBounds(args.max_index, args.extra_degree)
    stages = run_shuffle(ShuffleState.for_witnesses(args.m, bounds), args.iters)
    payload = []
    for st in stages:
        payload.append({"kind": "stage", "stage": st.stage, "size": len(st.generators),
                        "accepted_witnesses": len(st.log), "filtered_by_bounds": st.filtered,
                        "rejected": len(st.rejected), "violation": bool(st.rejected)})
        if args.snapshot_dir is not None:
            args.snapshot_dir.mkdir(parents=True, exist_ok=True)
            (args.snapshot_dir / f"stage_{st.stage}.txt").write_text(
                "\n".join(st.snapshot()) + "\n")
    if args.iters == 0:
        payload[0]["generators"] = stages[0].snapshot()
    sizes = [len(st.generators) for st in stages]
    payload.append({"kind": "monotone", "sizes": sizes,
                    "violation": any(b < a for a, b in zip(sizes, sizes[1:]))})
    if args.iters >= 1:
        audit = lemma34_verify(args.m, args.iters, args.max_index, args.extra_degree)
        payload += [dict(item, kind="lemma34-" + item["kind"]) for item in scan_payload(audit)]
    params = {"m": args.m, "iters": args.iters, "max_index": args.max_index,
              "extra_degree": args.extra_degree}
    return Report("shuffle", params, payload, (time.perf_counter() - t0) * 1000)


def _summary(report: Report) -> str:
    lines = [f"{report.check}: {report.status} ({report.violations} violation(s))"]
    for item in report.payload:
        kind = item.get("kind")
        if kind == "summary":
            lines.append(f"  {item['details']}")
        elif kind == "counterexample" and len(lines) < 12:
            lines.append(f"  counterexample {item['tuple']}")
        elif "separator" in item:
            lines.append(f"  m={item['m']}: bound {item['max_eord_bound']}, "
                         f"separator Eords {tuple(item['separator_eords'])}, "
                         f"slice {item['slice']['verdict']}")
        elif "verdict" in item:
            lines.append(f"  {item['verdict']}: {item.get('reason') or item.get('coefficients')}")
        elif kind == "stage":
            lines.append(f"  stage {item['stage']}: {item['size']} generators")
            if "generators" in item:
                lines += [f"    {g}" for g in item["generators"]]
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        report = {"check": cmd_check, "acc": cmd_acc, "shuffle": cmd_shuffle}[args.command](args)
    except (UsageError, IndexOverflowError) as exc:
        print(f"diffmix: error: {exc}", file=sys.stderr)
        return 2
    if args.json == "-":
        print(report.to_json())
    else:
        print(_summary(report))
        if args.json:
            Path(args.json).write_text(report.to_json() + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
