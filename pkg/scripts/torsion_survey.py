"""Torsion decisions for every element with small coefficients in a field.

    python3 scripts/torsion_survey.py "x^4+1" --bound 1
"""
from __future__ import annotations

import argparse
import itertools
from collections import Counter

from genalg.balls import is_torsion
from genalg.numberfield import NumberField
from genalg.rings import intern


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("field")
    ap.add_argument("--bound", type=int, default=1)
    args = ap.parse_args(argv)
    K = intern(NumberField(args.field, "x"))
    b = args.bound
    orders = Counter()
    for cs in itertools.product(range(-b, b + 1), repeat=K.d):
        alpha = K.from_ints(list(cs))
        if alpha.is_zero():
            continue
        res = is_torsion(alpha)
        if res.is_torsion:
            print(f"{alpha}: order {res.order}")
            orders[res.order] += 1
    print(dict(sorted(orders.items())))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
