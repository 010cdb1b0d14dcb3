"""Run every benchmark at a chosen scale and write the reports as JSON lines.

    python3 scripts/run_benchmarks.py --scale 0.5 --out results.jsonl
"""
from __future__ import annotations

import argparse
import sys

from genalg import bench
from genalg.bench import BenchReport
from genalg.config import (
    FatemanConfig,
    IdealBenchConfig,
    MinpolyBenchConfig,
    NFDetConfig,
    PearceConfig,
    ResultantTowerConfig,
)

SUITE = [
    (bench.cmd_fateman, FatemanConfig()),
    (bench.cmd_pearce, PearceConfig()),
    (bench.cmd_resultant_tower, ResultantTowerConfig()),
    (bench.cmd_nf_det, NFDetConfig()),
    (bench.cmd_ideal, IdealBenchConfig()),
    (bench.cmd_minpoly, MinpolyBenchConfig()),
]


def run(scale: float, repeat: int) -> list[BenchReport]:
    reports = []
    for cmd, cfg in SUITE:
        if scale != 1.0:
            cfg = cfg.scaled(scale)
        for _ in range(repeat):
            r = cmd(cfg)
            print(f"{r.name:16s} {r.fingerprint:28s} {r.seconds:9.3f} s", file=sys.stderr)
            reports.append(r)
    return reports


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=float, default=1.0)
    ap.add_argument("--repeat", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args(argv)
    reports = run(args.scale, args.repeat)
    lines = "".join(r.to_json() + "\n" for r in reports)
    if args.out == "-":
        sys.stdout.write(lines)
    else:
        with open(args.out, "w") as fh:
            fh.write(lines)
    return 0


if __name__ == "__main__":
    sys.exit(main())
