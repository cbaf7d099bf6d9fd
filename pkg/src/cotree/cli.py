"""Command-line interface.

Exit codes: 0 when everything passes, 1 when a validator reports findings,
2 for bad input or usage.
"""

from __future__ import annotations

import argparse
import gc
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .canonical import LABELS, annotate, compute_canonical_ordering, validate_canonical_ordering
from .dual_order import dual_canonical_ordering
from .errors import CotreeError, GraphBuildError, TooLargeForBruteCheck
from .generators import KINDS, generate
from .planar import PlanarGraph, build_graph, is_three_connected, load_graph, to_dot
from .report import ValidationReport
from .trees import barnette_tree, five_tree_pipeline, tree_to_walk
from .trees import to_dot as tree_to_dot

log = logging.getLogger("cotree")

EXIT_OK, EXIT_FINDINGS, EXIT_INPUT = 0, 1, 2
FORMATS = ("json", "dot", "text")


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    gen: str | None = None
    n: int | None = None
    seed: int = 0
    fmt: str = "json"
    out: str | None = None
    skip_3conn: bool = False
    batch: int = 1
    jobs: int = 1
    oracle_gate: int = 0
    ordering: str | None = None
    sizes: list[int] = field(default_factory=lambda: [25_000, 50_000, 100_000])
    repeats: int = 3
    three_conn_bound: int = 500

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        keys = cls.__dataclass_fields__.keys()
        return cls(**{k: v for k, v in vars(ns).items() if k in keys and v is not None})


class InputError(CotreeError):
    pass


def load_input(cfg: RunConfig, seed: int | None = None) -> PlanarGraph:
    if cfg.input and cfg.gen:
        raise InputError("give either --in or --gen, not both")
    if cfg.input:
        try:
            g = load_graph(cfg.input)
        except OSError as exc:
            raise InputError(str(exc)) from exc
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise InputError(f"malformed graph file: {exc}") from exc
        if not cfg.skip_3conn:
            try:
                ok = is_three_connected(g, bound=cfg.three_conn_bound)
            except TooLargeForBruteCheck:
                log.warning("n=%d is above the 3-connectivity check bound; relying on peeling", g.n)
                ok = True
            if not ok:
                raise InputError("input graph is not 3-connected")
        return g
    if cfg.gen:
        return generate(cfg.gen, cfg.n, cfg.seed if seed is None else seed)
    raise InputError("an input is required: --in FILE or --gen KIND")


def emit(cfg: RunConfig, payload: dict, text: str | None = None, dot: str | None = None) -> None:
    if cfg.fmt == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    elif cfg.fmt == "dot":
        if dot is None:
            raise InputError(f"{cfg.command} has no DOT output")
        body = dot
    else:
        body = (text if text is not None else _as_text(payload)) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _as_text(payload: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in payload.items())


# ----------------------------------------------------------------------
# Commands


def cmd_gen(cfg: RunConfig) -> int:
    g = generate(cfg.gen, cfg.n, cfg.seed)
    text = f"n={g.n} m={g.m} f={g.num_faces} roots={list(g.roots)}"
    emit(cfg, g.to_dict(), text=text, dot=to_dot(g))
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    g = load_input(cfg)
    if cfg.ordering:
        from .canonical import CanonicalOrdering

        with open(cfg.ordering) as fh:
            data = json.load(fh)
        co = CanonicalOrdering(
            tuple(tuple(x) for x in data["groups"]),
            tuple(data.get("kinds") or CanonicalOrdering.from_groups(data["groups"]).kinds),
        )
    else:
        co = compute_canonical_ordering(g)
    rep = validate_canonical_ordering(g, co)
    payload = {"n": g.n, "m": g.m, "K": co.K, **rep.to_dict()}
    emit(cfg, payload, text=rep.to_text())
    return EXIT_OK if rep.ok else EXIT_FINDINGS


def cmd_order(cfg: RunConfig) -> int:
    g = load_input(cfg)
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    payload = co.to_dict(an.idx)
    payload["labels"] = _label_records(g, an)
    attrs = {
        e: {"label": f"{LABELS[an.labels[2 * e + 1]]}/{LABELS[an.labels[2 * e]]}", "dir": "forward"}
        for e in range(g.m)
    }
    text = "\n".join(f"V{k}: {list(grp)}" for k, grp in enumerate(co.groups, start=1))
    emit(cfg, payload, text=text, dot=to_dot(g, attrs))
    return EXIT_OK


def _label_records(g: PlanarGraph, an) -> list[list]:
    recs = []
    for e in range(g.m):
        d = an.oriented_dart(e)
        u, v = g.head[d ^ 1], g.head[d]
        parent_of = v if an.parent[v] == d else None
        recs.append([u, v, "->", LABELS[an.labels[d]], LABELS[an.labels[d ^ 1]], parent_of])
    return recs


def cmd_dual_order(cfg: RunConfig) -> int:
    g = load_input(cfg)
    co = compute_canonical_ordering(g)
    dco = dual_canonical_ordering(g, co)
    rep = validate_canonical_ordering(dco.graph, dco.ordering)
    payload = dco.to_dict()
    # K* = K is not asserted, only reported
    payload["K_primal"] = co.K
    payload["K_dual"] = dco.ordering.K
    payload["valid"] = rep.ok
    text = "\n".join(f"F{k}: {list(grp)}" for k, grp in enumerate(dco.ordering.groups, start=1))
    emit(cfg, payload, text=text)
    return EXIT_OK if rep.ok else EXIT_FINDINGS


def cmd_barnette(cfg: RunConfig) -> int:
    g = load_input(cfg)
    pair = barnette_tree(g)
    emit(cfg, pair.to_dict(g), dot=tree_to_dot(g, pair))
    return EXIT_OK if pair.max_deg_tree <= 3 else EXIT_FINDINGS


def cmd_five_tree(cfg: RunConfig) -> int:
    g = load_input(cfg)
    res = five_tree_pipeline(g)
    pair = res.pair
    emit(cfg, pair.to_dict(g), dot=tree_to_dot(g, pair, res.H))
    return EXIT_OK if max(pair.degree_profile) <= 5 else EXIT_FINDINGS


def cmd_walk(cfg: RunConfig) -> int:
    g = load_input(cfg)
    pair = five_tree_pipeline(g).pair
    walk = tree_to_walk(g, pair.tree_edges)
    emit(cfg, walk.to_dict())
    return EXIT_OK if max(walk.max_vertex_visits, walk.max_face_visits) <= 5 else EXIT_FINDINGS


def _verify_one(args: tuple[RunConfig, int]) -> dict:
    from .verify import best_degree_pair, enumerate_spanning_trees, matrix_tree_count, verify_pipeline

    cfg, seed = args
    g = load_input(cfg, seed)
    rep, res = verify_pipeline(g)
    walk = tree_to_walk(g, res.pair.tree_edges)
    if walk.max_vertex_visits > 5 or walk.max_face_visits > 5:
        rep.add("walk", None, f"walk visits: vertex {walk.max_vertex_visits}, face {walk.max_face_visits}")
    out = {
        "seed": seed,
        "n": g.n,
        "degrees": list(res.pair.degree_profile),
        "report": rep.to_dict(),
    }
    if g.n <= cfg.oracle_gate:
        count = sum(1 for _ in enumerate_spanning_trees(g, gate=cfg.oracle_gate))
        kirchhoff = matrix_tree_count(g)
        pair = best_degree_pair(g, gate=cfg.oracle_gate)
        out["oracle"] = {"trees": count, "matrix_tree": kirchhoff, "best_pair": list(pair)}
        if count != kirchhoff:
            rep.add("oracle-count", None, f"enumeration gives {count}, matrix-tree {kirchhoff}")
        if max(pair) > 3:
            log.warning("no (<=3, <=3) tree/co-tree pair on seed %d: best %s", seed, pair)
        out["report"] = rep.to_dict()
    return out


def cmd_verify(cfg: RunConfig) -> int:
    seeds = [cfg.seed + i for i in range(max(1, cfg.batch))]
    if cfg.input and len(seeds) > 1:
        raise InputError("--batch needs a generator input")
    jobs = [(cfg, s) for s in seeds]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            results = list(ex.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    ok = all(r["report"]["ok"] for r in results)
    lines = []
    for r in results:
        status = "PASS" if r["report"]["ok"] else f"FAIL ({len(r['report']['findings'])} findings)"
        lines.append(f"seed {r['seed']} n={r['n']} degrees={r['degrees']} {status}")
    emit(cfg, {"ok": ok, "results": results}, text="\n".join(lines))
    return EXIT_OK if ok else EXIT_FINDINGS


def run_bench(sizes: Sequence[int], repeats: int = 3, seed: int = 0) -> dict:
    """Time the five-tree pipeline on seeded triangulations.

    Graph generation is excluded from the timing; a small warm-up run loads
    the compiled kernels first.
    """
    from .generators import triangulation

    five_tree_pipeline(triangulation(200, seed))
    rows = []
    for n in sizes:
        g = triangulation(n, seed)
        times = []
        for _ in range(repeats):
            # fresh instance so cached numpy arrays are rebuilt inside the timing
            g2 = PlanarGraph(g.n, g.head, g.cw_next, g.cw_prev, g.vdart, g.face_of, g.faces, g.outer_face, g.roots)
            g2._dart_index = g._dart_index
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                res = five_tree_pipeline(g2)
                times.append(time.perf_counter() - t0)
            finally:
                gc.enable()
        rows.append({
            "n": n,
            "seconds": times,
            "mean": sum(times) / len(times),
            "degrees": list(res.pair.degree_profile),
        })
    for prev, cur in zip(rows, rows[1:]):
        cur["ratio"] = cur["mean"] / prev["mean"]
    return {"sizes": list(sizes), "repeats": repeats, "rows": rows}


def cmd_bench(cfg: RunConfig) -> int:
    res = run_bench(cfg.sizes, cfg.repeats, cfg.seed)
    lines = [f"{'n':>8} {'mean s':>8} {'ratio':>6}  runs"]
    for r in res["rows"]:
        ratio = f"{r['ratio']:.2f}" if "ratio" in r else "-"
        runs = " ".join(f"{t:.3f}" for t in r["seconds"])
        lines.append(f"{r['n']:>8} {r['mean']:>8.3f} {ratio:>6}  {runs}")
    emit(cfg, res, text="\n".join(lines))
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "validate": cmd_validate,
    "order": cmd_order,
    "dual-order": cmd_dual_order,
    "barnette": cmd_barnette,
    "five-tree": cmd_five_tree,
    "walk": cmd_walk,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cotree", description="Spanning trees with bounded-degree co-trees.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, graph_input: bool = True) -> None:
        if graph_input:
            sp.add_argument("--in", dest="input", metavar="FILE", help="graph JSON file")
            sp.add_argument("--gen", choices=KINDS, help="generate the input graph")
            sp.add_argument("--n", type=int, help="size for --gen")
            sp.add_argument("--skip-3conn", action="store_true", help="skip the 3-connectivity check")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out", metavar="FILE")
        sp.add_argument("--format", dest="fmt", choices=FORMATS, default="json")

    g = sub.add_parser("gen", help="generate a graph")
    g.add_argument("gen", metavar="KIND", choices=KINDS)
    g.add_argument("--n", type=int)
    common(g, graph_input=False)

    v = sub.add_parser("validate", help="validate a canonical ordering")
    common(v)
    v.add_argument("--ordering", metavar="FILE", help="ordering JSON to check instead of a computed one")

    for name, helptext in (
        ("order", "canonical ordering, enumeration and labels"),
        ("dual-order", "canonical ordering of the dual"),
        ("barnette", "parent-edge spanning 3-tree"),
        ("five-tree", "tree and co-tree of maximum degree 5"),
        ("walk", "closed walk around the five-tree"),
    ):
        common(sub.add_parser(name, help=helptext))

    vf = sub.add_parser("verify", help="run the pipeline and every checker")
    common(vf)
    vf.add_argument("--batch", type=int, default=1, help="number of consecutive seeds")
    vf.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    vf.add_argument("--oracle-gate", type=int, default=0, help="run exhaustive oracles up to this n")

    b = sub.add_parser("bench", help="time the pipeline over doubling n")
    b.add_argument("--sizes", type=int, nargs="+", default=[25_000, 50_000, 100_000])
    b.add_argument("--repeats", type=int, default=3)
    common(b, graph_input=False)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return COMMANDS[cfg.command](cfg)
    except (InputError, GraphBuildError, CotreeError, ValueError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
