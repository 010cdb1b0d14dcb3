"""Largest benchmark configurations, each run in a fresh process with a one hour cap."""
from __future__ import annotations

import json
import subprocess
import sys
import time

RUNS = [
    ["bench", "fateman", "--n", "30"],
    ["bench", "nf-det", "--dim", "80"],
    ["bench", "ideal", "--n", "128", "--count", "100"],
    ["bench", "ideal", "--n", "64", "--count", "100"],
    ["bench", "ideal", "--n", "32", "--count", "100"],
]
CAP = 3600


def main() -> int:
    failed = 0
    for argv in RUNS:
        start = time.perf_counter()
        try:
            out = subprocess.run(
                [sys.executable, "-m", "genalg", *argv, "--json"],
                capture_output=True, text=True, timeout=CAP,
            )
        except subprocess.TimeoutExpired:
            print(f"{' '.join(argv)}: timed out after {CAP} s")
            failed += 1
            continue
        wall = time.perf_counter() - start
        if out.returncode:
            print(f"{' '.join(argv)}: exit {out.returncode}\n{out.stderr}")
            failed += 1
            continue
        rep = json.loads(out.stdout)
        print(f"{' '.join(argv)}: {rep['fingerprint']} ({wall:.1f} s wall)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
