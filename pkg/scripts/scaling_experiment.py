#!/usr/bin/env python3
"""Run the scaling benchmarks across problems and write one CSV per problem.

Example:
    python3 scripts/scaling_experiment.py --out-dir results --seed 1
    python3 scripts/scaling_experiment.py --quick   # small sizes, fast sanity

The curve-pair benchmark doubles n three times; on a quadratic-time solver
each doubling should roughly quadruple wall_ns, which is exactly what the
emitted CSV lets you check (wall_ns column, min over repeats per size).
"""

from __future__ import annotations

import argparse
from pathlib import Path

from ovgeom.bench import bench_csv, run_bench

FULL_PLAN = {
    "ov": dict(sizes=[128, 256, 512, 1024], d=16),
    "bcp-euclid": dict(sizes=[32, 64, 128, 256], d=8),
    "bcp-frechet": dict(sizes=[8, 16, 32], d=6),
    "frechet-pair": dict(sizes=[128, 256, 512, 1024], d=2),
    "nn-query": dict(sizes=[256, 512, 1024, 2048], d=4),
}

QUICK_PLAN = {
    "ov": dict(sizes=[32, 64], d=8),
    "bcp-euclid": dict(sizes=[8, 16], d=4),
    "bcp-frechet": dict(sizes=[4, 8], d=4),
    "frechet-pair": dict(sizes=[32, 64], d=2),
    "nn-query": dict(sizes=[64, 128], d=4),
}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="bench-results", help="CSV output directory")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="small sizes for a fast run")
    args = ap.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    plan = QUICK_PLAN if args.quick else FULL_PLAN

    for problem, cfg in plan.items():
        records = run_bench(
            problem, cfg["sizes"], repeats=args.repeats, d=cfg["d"], seed=args.seed
        )
        path = out_dir / f"{problem}.csv"
        path.write_text(bench_csv(records))
        best = {}
        for r in records:
            best[r.n] = min(best.get(r.n, r.wall_ns), r.wall_ns)
        trend = "  ".join(f"n={n}:{ns / 1e6:.2f}ms" for n, ns in sorted(best.items()))
        print(f"{problem:<14} -> {path}   {trend}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
