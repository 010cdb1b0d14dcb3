"""Command line: ``genalg bench <name> ...`` and ``genalg demo torsion ...``.

Exit status is 0 on success, 2 when a built-in oracle check fails and 1
on any other error.
"""
from __future__ import annotations

import argparse
import sys

from . import bench
from .config import (
    FatemanConfig,
    IdealBenchConfig,
    MinpolyBenchConfig,
    NFDetConfig,
    PearceConfig,
    ResultantTowerConfig,
    TorsionDemoConfig,
)

EXIT_ORACLE = 2


def _common(p: argparse.ArgumentParser, seed: bool = False):
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="print the report as JSON")
    fmt.add_argument("--csv", action="store_true", help="print the report as CSV")
    p.add_argument("--scale", type=float, default=1.0, help="multiply the size parameter")
    if seed:
        p.add_argument("--seed", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genalg", description="generic algebra benchmarks")
    top = parser.add_subparsers(dest="group", required=True)

    b = top.add_parser("bench", help="run a benchmark").add_subparsers(dest="name", required=True)
    p = b.add_parser("fateman")
    p.add_argument("--n", type=int, default=FatemanConfig.n)
    _common(p)
    p = b.add_parser("pearce")
    p.add_argument("--n", type=int, default=PearceConfig.n)
    _common(p)
    p = b.add_parser("resultant-tower")
    p.add_argument("--e", type=int, default=ResultantTowerConfig.e)
    _common(p)
    p = b.add_parser("nf-det")
    p.add_argument("--dim", type=int, default=NFDetConfig.dim)
    _common(p, seed=True)
    p = b.add_parser("ideal")
    p.add_argument("--n", type=int, default=IdealBenchConfig.n)
    p.add_argument("--count", type=int, default=IdealBenchConfig.count)
    p.add_argument("--bound", type=int, default=IdealBenchConfig.bound)
    _common(p, seed=True)
    p = b.add_parser("minpoly")
    p.add_argument("--dim", type=int, default=MinpolyBenchConfig.dim)
    _common(p, seed=True)

    d = top.add_parser("demo", help="small demonstrations").add_subparsers(dest="name", required=True)
    p = d.add_parser("torsion")
    p.add_argument("--field", default=TorsionDemoConfig.field)
    p.add_argument("--elem", default=TorsionDemoConfig.elem)
    _common(p)
    return parser


def _config(args):
    name = args.name
    if args.group == "demo":
        return bench.cmd_torsion_demo, TorsionDemoConfig(field=args.field, elem=args.elem)
    seed = {} if getattr(args, "seed", None) is None else {"seed": args.seed}
    if name == "fateman":
        cfg, cmd = FatemanConfig(n=args.n), bench.cmd_fateman
    elif name == "pearce":
        cfg, cmd = PearceConfig(n=args.n), bench.cmd_pearce
    elif name == "resultant-tower":
        cfg, cmd = ResultantTowerConfig(e=args.e), bench.cmd_resultant_tower
    elif name == "nf-det":
        cfg, cmd = NFDetConfig(dim=args.dim, **seed), bench.cmd_nf_det
    elif name == "ideal":
        cfg = IdealBenchConfig(n=args.n, count=args.count, bound=args.bound, **seed)
        cmd = bench.cmd_ideal
    else:
        cfg, cmd = MinpolyBenchConfig(dim=args.dim, **seed), bench.cmd_minpoly
    if args.scale != 1.0:
        cfg = cfg.scaled(args.scale)
    return cmd, cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cmd, cfg = _config(args)
    try:
        report = cmd(cfg)
    except bench.OracleMismatch as exc:
        print(f"oracle check failed: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    if args.json:
        print(report.to_json())
    elif args.csv:
        print(report.to_csv(), end="")
    else:
        flag = "checked" if report.oracle_checked else "unchecked"
        print(f"{report.name}: {report.fingerprint}  ({report.seconds:.3f} s, oracle {flag})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
