#!/usr/bin/env python3
"""Regenerate tests/fixtures from the seeded generators.

Every fixture is a 3-connected plane graph with n <= 8, written in the
graph JSON format. ``k4.json`` is the tetrahedron used by the CLI examples.
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from cotree.generators import generate
from cotree.planar import is_three_connected

SMALL = [
    ("k4", "tetrahedron", None, 0),
    ("octahedron", "octahedron", None, 0),
    ("cube", "cube", None, 0),
    ("prism6", "prism", 6, 0),
    ("prism8", "prism", 8, 0),
    *[(f"wheel{n}", "wheel", n, 0) for n in range(5, 9)],
    *[(f"tri{n}_s{s}", "triangulation", n, s) for n in (5, 6, 7, 8) for s in (0, 1)],
    *[(f"poly{n}_s{s}", "polyhedron", n, s) for n in (6, 7, 8) for s in (0, 1, 2)],
    *[(f"cubic{n}_s{s}", "cubic", n, s) for n in (6, 8) for s in (0, 1)],
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "tests" / "fixtures")
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    index = []
    for name, kind, n, seed in SMALL:
        g = generate(kind, n, seed)
        assert g.n <= 8 and is_three_connected(g), name
        (args.out / f"{name}.json").write_text(g.to_json() + "\n")
        index.append({"name": name, "kind": kind, "n": g.n, "m": g.m, "seed": seed})
    (args.out / "index.json").write_text(json.dumps(index, indent=2) + "\n")
    print(f"wrote {len(index)} fixtures to {args.out}")


if __name__ == "__main__":
    main()
