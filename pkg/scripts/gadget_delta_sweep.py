#!/usr/bin/env python3
"""Certify candidate zigzag amplitudes for the disjunction gadget.

For each delta the certification sweep compares the gadget's curve-pair
decision against the pair-scan oracle (exhaustive tiny instances plus
seeded random ones) and prints the verdict with a counterexample when one
exists.

The default domain stops at dimension 3.  Push ``--max-d`` to 4 or beyond
to reproduce the known structural failure of this construction on wider
vectors (see the ovgeom.gadgets module docstring).  False positives only
arise on witness-free instances, which uniform sampling produces rarely, so
give the sweep a few hundred trials there; with enough of them every delta
fails, indicting the assembly rather than the amplitude.  A deterministic
dimension-4 counterexample is pinned in tests/test_gadgets.py.

Example:
    python3 scripts/gadget_delta_sweep.py --deltas 1/4,1/8,1/16,1/3
    python3 scripts/gadget_delta_sweep.py --deltas 1/4 --max-d 4 --trials 400
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from ovgeom.formats import format_instance
from ovgeom.gadgets import GadgetConfig, validate_gadget_config


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--deltas", default="1/4,1/8,1/16,1/3", help="comma-separated rationals"
    )
    ap.add_argument("--trials", type=int, default=128, help="random instances per delta")
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    any_bad = False
    for tok in args.deltas.split(","):
        delta = Fraction(tok)
        try:
            cfg = GadgetConfig(delta)
        except ValueError as exc:
            print(f"delta={tok:<8} REJECTED  {exc}")
            any_bad = True
            continue
        result = validate_gadget_config(
            cfg,
            trials=args.trials,
            max_n=args.max_n,
            max_d=args.max_d,
            seed=args.seed,
        )
        if result.ok:
            print(f"delta={tok:<8} CERTIFIED  (max_n={args.max_n}, max_d={args.max_d})")
        else:
            any_bad = True
            print(f"delta={tok:<8} FAILED     first disagreeing instance:")
            for line in format_instance(result.counterexample).splitlines():
                print(f"    {line}")
    return 1 if any_bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
