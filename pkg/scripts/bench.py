#!/usr/bin/env python3
"""Time the five-tree pipeline on seeded triangulations and save the rows."""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from cotree.cli import run_bench


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[25_000, 50_000, 100_000])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("reports/bench.json"))
    args = ap.parse_args()

    res = run_bench(args.sizes, args.repeats, args.seed)
    for r in res["rows"]:
        ratio = f"{r['ratio']:.2f}" if "ratio" in r else "-"
        print(f"n={r['n']:>7}  mean={r['mean']:.3f}s  ratio={ratio}  degrees={r['degrees']}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(res, indent=2) + "\n")


if __name__ == "__main__":
    main()
