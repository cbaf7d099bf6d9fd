"""Independent checkers and oracles.

Nothing here calls the compiled kernels: labels are re-derived from which
faces each group completes, H-edges are re-derived rule by rule, and tree
properties are checked with plain union-find.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Callable, Iterable, Iterator

import numpy as np

from .canonical import (
    CHAIN_RULES,
    E,
    LABELS,
    N,
    NE,
    NW,
    S,
    SE,
    SW,
    W,
    CanonicalOrdering,
    EdgeAnnotation,
    annotate,
    check_face_orientation,
    compute_canonical_ordering,
    mirror,
    validate_canonical_ordering,
)
from .dual_order import DualCanonicalOrdering, verify_label_correspondence
from .errors import GraphBuildError, TooLarge
from .planar import PlanarGraph, build_graph
from .report import ValidationReport
from .trees import H1, H2, H3, H4, FiveTreeResult, HSubgraph, SpanningTreePair, five_tree_pipeline

MULTIPLICITY = {SW: 1, W: 1, N: 1, E: 1, SE: 1}


class _DSU:
    def __init__(self, n: int) -> None:
        self.p = list(range(n))

    def find(self, x: int) -> int:
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[a] = b
        return True


# ----------------------------------------------------------------------
# Trees


def _check_tree(size: int, ends: list[tuple[int, int]], what: str, rep: ValidationReport) -> None:
    if len(ends) != size - 1:
        rep.add(f"{what}-size", len(ends), f"{what} has {len(ends)} edges, a spanning tree needs {size - 1}")
    dsu = _DSU(size)
    comps = size
    for i, (a, b) in enumerate(ends):
        if dsu.union(a, b):
            comps -= 1
        else:
            rep.add(f"{what}-cycle", i, f"edge {a}-{b} closes a cycle")
    if comps != 1:
        rep.add(f"{what}-spanning", comps, f"{what} leaves {comps} components")


def verify_spanning_tree(g: PlanarGraph, edges: Iterable[int]) -> ValidationReport:
    rep = ValidationReport()
    es = sorted(set(edges))
    bad = [e for e in es if not 0 <= e < g.m]
    if bad:
        rep.add("edge-range", bad[:5], "edge ids outside the graph")
        return rep
    _check_tree(g.n, [g.endpoints(e) for e in es], "tree", rep)
    return rep


def verify_cotree(g: PlanarGraph, tree_edges: Iterable[int], cotree_edges: Iterable[int]) -> ValidationReport:
    """The co-tree must be the complement of the tree and span the dual."""
    rep = ValidationReport()
    tree = set(tree_edges)
    cot = set(cotree_edges)
    if tree & cot or len(tree | cot) != g.m:
        rep.add("cotree-complement", None, "co-tree is not the complement of the tree")
    ends = [(g.face_of[2 * e], g.face_of[2 * e + 1]) for e in sorted(cot)]
    _check_tree(g.num_faces, ends, "cotree", rep)
    return rep


def degree_profile(g: PlanarGraph, edges: Iterable[int], dual_side: bool = False) -> tuple[int, list[int]]:
    """Maximum degree and histogram ``hist[d]`` of vertices (or faces) of degree ``d``."""
    size = g.num_faces if dual_side else g.n
    arr = g.face_of if dual_side else g.head
    deg = [0] * size
    for e in edges:
        deg[arr[2 * e]] += 1
        deg[arr[2 * e + 1]] += 1
    mx = max(deg, default=0)
    hist = [0] * (mx + 1)
    for d in deg:
        hist[d] += 1
    return mx, hist


# ----------------------------------------------------------------------
# Oracles for tiny graphs


def enumerate_spanning_trees(g: PlanarGraph, gate: int = 12) -> Iterator[frozenset[int]]:
    """Every spanning tree exactly once, by include/exclude recursion on edges.

    Including an edge contracts it; excluding one deletes it, which is only
    explored while the rest can still connect the graph.
    """
    if g.n > gate:
        raise TooLarge(f"enumeration is gated at n <= {gate}, got n = {g.n}")
    edges = g.edges()
    m = len(edges)

    def connectable(parent: list[int], start: int, comps: int) -> bool:
        dsu = _DSU(0)
        dsu.p = parent[:]
        for a, b in edges[start:]:
            if dsu.union(a, b):
                comps -= 1
                if comps == 1:
                    return True
        return comps == 1

    def rec(i: int, parent: list[int], chosen: list[int], comps: int) -> Iterator[frozenset[int]]:
        if comps == 1:
            yield frozenset(chosen)
            return
        if i == m or m - i < comps - 1:
            return
        dsu = _DSU(0)
        dsu.p = parent[:]
        a, b = edges[i]
        ra, rb = dsu.find(a), dsu.find(b)
        if ra != rb:
            dsu.p[ra] = rb
            chosen.append(i)
            yield from rec(i + 1, dsu.p, chosen, comps - 1)
            chosen.pop()
        if connectable(parent, i + 1, comps):
            yield from rec(i + 1, parent, chosen, comps)

    yield from rec(0, list(range(g.n)), [], g.n)


def _bareiss_det(mat: list[list[int]]) -> int:
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def matrix_tree_count(g: PlanarGraph) -> int:
    """Number of spanning trees from a Laplacian cofactor, in exact integers."""
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return _bareiss_det([row[1:] for row in lap[1:]])


def best_degree_pair(g: PlanarGraph, gate: int = 12) -> tuple[int, int]:
    """Over all spanning trees, the (tree, co-tree) maximum degrees minimising
    ``(max of the two, their sum)``."""
    best = None
    for t in enumerate_spanning_trees(g, gate):
        dt = degree_profile(g, t)[0]
        dc = degree_profile(g, (e for e in range(g.m) if e not in t), dual_side=True)[0]
        key = (max(dt, dc), dt + dc, dt)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[2], best[1] - best[2]


# ----------------------------------------------------------------------
# Orientation and labels


def check_orientation(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation,
                      chain_rule: str = "larger-first") -> ValidationReport:
    """Enumeration, edge directions, interval structure, first/last outgoing
    edges and parents, all recomputed from scratch."""
    rep = ValidationReport()
    n = g.n
    head = g.head
    idx = annot.idx
    if sorted(idx) != list(range(1, n + 1)):
        rep.add("idx", None, "indices are not a permutation of 1..n")
        return rep
    gi = co.group_index(n)
    s = 0
    for k, grp in enumerate(co.groups, start=1):
        got = sorted(idx[v] for v in grp)
        if got != list(range(s + 1, s + len(grp) + 1)):
            rep.add("idx", k, "group indices are not the next consecutive block")
        if k >= 2 and len(grp) > 1:
            ends = []
            for z in (grp[0], grp[-1]):
                ends.append(max((idx[u] for u in g.neighbours(z) if gi[u] < k), default=0))
            start_left = ends[0] > ends[1]
            if chain_rule == "smaller-first":
                start_left = not start_left
            want = list(range(s + 1, s + len(grp) + 1))
            have = [idx[z] for z in grp]
            if have != (want if start_left else want[::-1]):
                rep.add("chain-direction", k, f"chain {grp} numbered in the wrong direction")
        s += len(grp)
    v1, _, vn = g.roots
    dn = g.dart(vn, v1)
    for d in range(len(head)):
        t, h = head[d ^ 1], head[d]
        want = idx[t] < idx[h]
        if d == dn:
            want = True
        elif d == dn ^ 1:
            want = False
        if annot.out[d] != want:
            rep.add("direction", d >> 1, f"edge {t}-{h} directed against the enumeration")
    for v in range(n):
        flags = [annot.out[d] for d in g.darts_around(v)]
        changes = sum(1 for i in range(len(flags)) if flags[i] != flags[i - 1])
        if changes != 2:
            rep.add("intervals", v, "incoming and outgoing edges do not form two intervals")
            continue
        darts = list(g.darts_around(v))
        first = last = -1
        for i, d in enumerate(darts):
            if annot.out[d] and not annot.out[darts[i - 1]]:
                first = d
            if annot.out[d] and not annot.out[darts[(i + 1) % len(darts)]]:
                last = d
        if annot.first_out[v] != first or annot.last_out[v] != last:
            rep.add("first-last", v, "first/last outgoing edge recorded wrongly")
        inc = [d ^ 1 for d in darts if not annot.out[d] and d != dn ^ 1]
        if v == v1:
            if annot.parent[v] != -1:
                rep.add("parent", v, "v1 must have no parent")
            continue
        want_p = max(inc, key=lambda d: idx[head[d ^ 1]], default=-1)
        if annot.parent[v] != want_p:
            rep.add("parent", v, "parent-edge is not the incoming edge with the largest tail index")
    rep.extend(check_face_orientation(g, annot))
    return rep


def derive_labels(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation) -> list[int]:
    """Labels from face completion alone.

    For an incoming edge at ``z`` in group ``k``, look at the faces on either
    side: SE when only the face after it (clockwise) is completed by ``V_k``,
    SW when only the face before it is, S when both are.
    """
    n = g.n
    gi = co.group_index(n)
    v1, v2, vn = g.roots
    comp = [0] * g.num_faces
    for f in range(g.num_faces):
        comp[f] = max(gi[v] for v in g.face_vertices(f))
    inf = len(co.groups) + 1
    comp[g.outer_face] = inf
    comp[g.face_of[g.dart(vn, v1)]] = inf
    head, face_of = g.head, g.face_of
    lab = [-1] * len(head)
    for x in range(len(head)):
        z, p = head[x ^ 1], head[x]
        k = gi[z]
        if gi[p] == k:
            if k == 1:
                continue
            if comp[face_of[x ^ 1]] == k:
                lab[x], lab[x ^ 1] = E, W
            continue
        if annot.out[x] or gi[p] > k:
            continue
        before = comp[face_of[x]] == k
        after = comp[face_of[x ^ 1]] == k
        if before and after:
            lab[x] = S
        elif after:
            lab[x] = SE
        elif before:
            lab[x] = SW
        else:
            continue
        lab[x ^ 1] = mirror(lab[x])
    d = g.dart(v1, v2)
    lab[d], lab[d ^ 1] = E, W
    d = g.dart(v1, vn)
    lab[d], lab[d ^ 1] = S, N
    return lab


def check_labels(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation) -> ValidationReport:
    rep = ValidationReport()
    if annot.labels is None:
        rep.add("labels", None, "annotation carries no labels")
        return rep
    want = derive_labels(g, co, annot)
    for d, (a, b) in enumerate(zip(annot.labels, want)):
        if a != b:
            name = LABELS[a] if a >= 0 else "?"
            wname = LABELS[b] if b >= 0 else "?"
            rep.add("label", d, f"dart {g.tail(d)}->{g.head[d]} labelled {name}, expected {wname}")
    return rep


def check_label_grammar(g: PlanarGraph, annot: EdgeAnnotation) -> ValidationReport:
    """Clockwise around each vertex: S* SW? W? NW* N? NE* E? SE?, cyclically."""
    rep = ValidationReport()
    for v in range(g.n):
        seq = [annot.labels[d] for d in g.darts_around(v)]
        if min(seq) < 0:
            rep.add("grammar", v, "unlabelled incidence")
            continue
        descents = sum(1 for i in range(len(seq)) if seq[i] < seq[i - 1])
        if descents > 1 or (descents == 0 and len(set(seq)) > 1):
            rep.add("grammar", v, f"labels {[LABELS[x] for x in seq]} are not a rotation of a sorted word")
        for lab, cnt in Counter(seq).items():
            if cnt > MULTIPLICITY.get(lab, cnt):
                rep.add("grammar", v, f"label {LABELS[lab]} occurs {cnt} times")
    return rep


def check_parent_lemma(g: PlanarGraph, annot: EdgeAnnotation) -> ValidationReport:
    """Each parent-edge is the first outgoing edge of its tail labelled W, NW
    or N there, or the last one labelled E, NE or N."""
    rep = ValidationReport()
    for v, d in enumerate(annot.parent):
        if d < 0:
            continue
        t = g.head[d ^ 1]
        lab = annot.labels[d]
        ok = (d == annot.first_out[t] and lab in (W, NW, N)) or (
            d == annot.last_out[t] and lab in (E, NE, N)
        )
        if not ok:
            rep.add("parent-lemma", v, f"parent-edge {t}->{v} is neither first nor last of the right kind")
    return rep


def check_annotation(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation,
                     chain_rule: str = "larger-first") -> ValidationReport:
    rep = check_orientation(g, co, annot, chain_rule)
    rep.extend(check_labels(g, co, annot))
    rep.extend(check_label_grammar(g, annot))
    rep.extend(check_parent_lemma(g, annot))
    return rep


# ----------------------------------------------------------------------
# H-edges and the five-tree


def h_edges_reference(g: PlanarGraph, annot: EdgeAnnotation) -> HSubgraph:
    """Rule-by-rule H-edge tags straight from the definitions."""
    tags = [0] * g.m
    lab = annot.labels
    for e in range(g.m):
        if annot.group[g.head[2 * e]] == annot.group[g.head[2 * e + 1]]:
            tags[e] |= H1
    for v in range(g.n):
        outs = [d for d in g.darts_around(v) if annot.out[d]]
        # clockwise from the first outgoing edge
        while outs and outs[0] != annot.first_out[v]:
            outs.append(outs.pop(0))
        nw = [d for d in outs if lab[d] == NW]
        ne = [d for d in outs if lab[d] == NE]
        if nw:
            tags[nw[-1] >> 1] |= H2
        if ne:
            tags[ne[0] >> 1] |= H3
    for w in range(g.n):
        d = annot.parent[w]
        if d >= 0 and lab[d] == N:
            tags[d >> 1] |= H4
    return HSubgraph(tuple(tags))


def check_h_edges(g: PlanarGraph, annot: EdgeAnnotation, H: HSubgraph) -> ValidationReport:
    rep = ValidationReport()
    ref = h_edges_reference(g, annot)
    for e, (a, b) in enumerate(zip(H.tags, ref.tags)):
        if a != b:
            rep.add("h-tags", e, f"edge {g.endpoints(e)} has tags {a:#06b}, rules give {b:#06b}")
    deg = H.degrees(g)
    for v, d in enumerate(deg):
        if d > 5:
            rep.add("h-degree", v, f"{d} incident H-edges")
    if not H.is_connected(g):
        rep.add("h-connected", None, "H-edges do not connect the graph")
    return rep


def check_five_tree(g: PlanarGraph, res: FiveTreeResult, bound: int = 5) -> ValidationReport:
    rep = ValidationReport()
    pair = res.pair
    rep.extend(verify_spanning_tree(g, pair.tree_edges))
    rep.extend(verify_cotree(g, pair.tree_edges, pair.cotree_edges))
    dt = degree_profile(g, pair.tree_edges)[0]
    dc = degree_profile(g, pair.cotree_edges, dual_side=True)[0]
    if dt > bound:
        rep.add("tree-degree", dt, f"tree has maximum degree {dt}")
    if dc > bound:
        rep.add("cotree-degree", dc, f"co-tree has maximum degree {dc}")
    if (dt, dc) != pair.degree_profile:
        rep.add("degree-record", pair.degree_profile, f"recorded degrees differ from ({dt}, {dc})")
    H, Hs = res.H, res.Hstar
    h0 = {e for e in range(g.m) if H.tags[e] and not Hs.tags[e]}
    if h0 != set(res.H0):
        rep.add("h0", None, "H0 differs from its definition")
    dsu = _DSU(g.n)
    for e in sorted(h0):
        if not dsu.union(*g.endpoints(e)):
            rep.add("h0-acyclic", e, "H0 contains a cycle")
    for e in range(g.m):
        if not H.tags[e] and not Hs.tags[e]:
            rep.add("h-cover", e, "neither the edge nor its dual is an H-edge")
    missing = h0 - set(pair.tree_edges)
    if missing:
        rep.add("h0-in-tree", sorted(missing)[:5], "H0 edges missing from the tree")
    outside = [e for e in pair.tree_edges if not H.tags[e]]
    if outside:
        rep.add("tree-in-h", sorted(outside)[:5], "tree uses edges outside H(G)")
    outside = [e for e in pair.cotree_edges if not Hs.tags[e]]
    if outside:
        rep.add("cotree-in-hstar", sorted(outside)[:5], "co-tree uses edges outside H(G*)")
    return rep


def check_barnette(g: PlanarGraph, annot: EdgeAnnotation, pair: SpanningTreePair) -> ValidationReport:
    rep = verify_spanning_tree(g, pair.tree_edges)
    want = set(annot.parent_edges())
    if set(pair.tree_edges) != want:
        rep.add("parent-edges", None, "tree is not the set of parent-edges")
    dt = degree_profile(g, pair.tree_edges)[0]
    if dt > 3:
        rep.add("tree-degree", dt, f"parent-edge tree has maximum degree {dt}")
    return rep


def verify_pipeline(g: PlanarGraph, brute: bool | None = None) -> tuple[ValidationReport, FiveTreeResult]:
    """Run the whole pipeline and every checker on it."""
    res = five_tree_pipeline(g)
    rep = validate_canonical_ordering(g, res.ordering, brute=brute)
    rep.extend(check_annotation(g, res.ordering, res.annotation))
    dco = res.dual_ordering
    rep.extend(validate_canonical_ordering(dco.graph, dco.ordering, brute=brute))
    rep.extend(check_annotation(dco.graph, dco.ordering, dco.annotation))
    rep.extend(verify_label_correspondence(g, res.annotation, dco))
    rep.extend(check_h_edges(g, res.annotation, res.H))
    rep.extend(check_h_edges(dco.graph, dco.annotation, res.Hstar))
    from .trees import barnette_tree

    rep.extend(check_barnette(g, res.annotation, barnette_tree(g, res.annotation)))
    rep.extend(check_five_tree(g, res))
    return rep, res


# ----------------------------------------------------------------------
# Mutation catalog


@dataclass(frozen=True)
class Artifacts:
    g: PlanarGraph
    ordering: CanonicalOrdering
    annotation: EdgeAnnotation
    dual_ordering: DualCanonicalOrdering
    result: FiveTreeResult

    @classmethod
    def build(cls, g: PlanarGraph) -> "Artifacts":
        res = five_tree_pipeline(g)
        return cls(g, res.ordering, res.annotation, res.dual_ordering, res)


@dataclass(frozen=True)
class Mutation:
    name: str
    apply: Callable[[Artifacts, np.random.Generator], "Mutant | None"]


@dataclass(frozen=True)
class Mutant:
    """A corrupted artifact plus the checker expected to reject it."""

    description: str
    check: Callable[[], ValidationReport]


def _groups_with(co: CanonicalOrdering, k: int, grp) -> CanonicalOrdering:
    gs = list(co.groups)
    gs[k] = tuple(grp)
    return CanonicalOrdering.from_groups(gs)


def _mut_swap_groups(a: Artifacts, rng) -> Mutant | None:
    gs = list(a.ordering.groups)
    if len(gs) < 4:
        return None
    k = int(rng.integers(1, len(gs) - 1))
    gs[k], gs[-1] = gs[-1], gs[k]
    co = CanonicalOrdering.from_groups(gs)
    return Mutant(f"swap group {k + 1} with the last group", lambda: validate_canonical_ordering(a.g, co))


def _mut_reverse_chain(a: Artifacts, rng) -> Mutant | None:
    ks = [k for k, grp in enumerate(a.ordering.groups) if k > 0 and len(grp) > 1]
    if not ks:
        return None
    k = ks[int(rng.integers(len(ks)))]
    co = _groups_with(a.ordering, k, a.ordering.groups[k][::-1])
    return Mutant(f"reverse chain {k + 1}", lambda: validate_canonical_ordering(a.g, co))


def _mut_move_vertex(a: Artifacts, rng) -> Mutant | None:
    g, co = a.g, a.ordering
    v1, v2, _ = g.roots
    cands = [
        k for k, grp in enumerate(co.groups)
        if 1 < k < co.K - 1 and len(grp) == 1
        and sum(1 for u in g.neighbours(grp[0]) if u in (v1, v2)) < 2
    ]
    if not cands:
        return None
    k = cands[int(rng.integers(len(cands)))]
    gs = list(co.groups)
    grp = gs.pop(k)
    gs.insert(1, grp)
    bad = CanonicalOrdering.from_groups(gs)
    return Mutant(f"move singleton {grp} to position 2", lambda: validate_canonical_ordering(g, bad))


def _mut_swap_v1(a: Artifacts, rng) -> Mutant | None:
    co = a.ordering
    if len(co.groups) < 3:
        return None
    gs = [tuple(x) for x in co.groups]
    v1, v2 = gs[0]
    z = gs[1][0]
    gs[0] = (v1, z)
    gs[1] = tuple(v2 if x == z else x for x in gs[1])
    bad = CanonicalOrdering.from_groups(gs)
    return Mutant("replace v2 in V1", lambda: validate_canonical_ordering(a.g, bad))


def _mut_flip_edge(a: Artifacts, rng) -> Mutant | None:
    g, an = a.g, a.annotation
    e = int(rng.integers(g.m))
    out = list(an.out)
    out[2 * e], out[2 * e + 1] = out[2 * e + 1], out[2 * e]
    bad = replace(an, out=tuple(out))
    return Mutant(f"flip edge {e}", lambda: check_orientation(g, a.ordering, bad))


def _mut_relabel(a: Artifacts, rng) -> Mutant | None:
    g, an = a.g, a.annotation
    d = int(rng.integers(2 * g.m))
    lab = list(an.labels)
    lab[d] = (lab[d] + 1 + int(rng.integers(7))) % 8
    bad = replace(an, labels=tuple(lab))
    return Mutant(f"relabel dart {d}", lambda: check_labels(g, a.ordering, bad))


def _mut_wrong_parent(a: Artifacts, rng) -> Mutant | None:
    g, an = a.g, a.annotation
    v1, _, vn = g.roots
    dn = g.dart(vn, v1)
    cands = []
    for v in range(g.n):
        if an.parent[v] < 0:
            continue
        inc = [d ^ 1 for d in g.darts_around(v) if not an.out[d] and d != dn ^ 1]
        others = [d for d in inc if d != an.parent[v]]
        if others:
            cands.append((v, others))
    if not cands:
        return None
    v, others = cands[int(rng.integers(len(cands)))]
    parent = list(an.parent)
    parent[v] = others[int(rng.integers(len(others)))]
    bad = replace(an, parent=tuple(parent))
    return Mutant(f"wrong parent at {v}", lambda: check_orientation(g, a.ordering, bad))


def _mut_drop_tree_edge(a: Artifacts, rng) -> Mutant | None:
    tree = sorted(a.result.pair.tree_edges)
    e = tree[int(rng.integers(len(tree)))]
    rest = [x for x in tree if x != e]
    return Mutant(f"drop tree edge {e}", lambda: verify_spanning_tree(a.g, rest))


def _mut_cycle_swap(a: Artifacts, rng) -> Mutant | None:
    g = a.g
    tree = sorted(a.result.pair.tree_edges)
    order = rng.permutation(len(tree))
    for i in order:
        e = tree[int(i)]
        rest = [x for x in tree if x != e]
        dsu = _DSU(g.n)
        for x in rest:
            dsu.union(*g.endpoints(x))
        same = [f for f in range(g.m) if f not in a.result.pair.tree_edges
                and dsu.find(g.endpoints(f)[0]) == dsu.find(g.endpoints(f)[1])]
        if same:
            f = same[int(rng.integers(len(same)))]
            bad = rest + [f]
            return Mutant(f"swap tree edge {e} for cycle edge {f}", lambda: verify_spanning_tree(g, bad))
    return None


def _mut_non_h_exchange(a: Artifacts, rng) -> Mutant | None:
    g, res = a.g, a.result
    tree = set(res.pair.tree_edges)
    for e in sorted(tree):
        rest = tree - {e}
        dsu = _DSU(g.n)
        for x in rest:
            dsu.union(*g.endpoints(x))
        for f in range(g.m):
            if f in tree or res.H.tags[f]:
                continue
            u, v = g.endpoints(f)
            if dsu.find(u) != dsu.find(v):
                from .trees import make_pair

                pair = make_pair(g, rest | {f})
                bad = replace(res, pair=pair)
                return Mutant(f"exchange tree edge {e} for non-H edge {f}", lambda: check_five_tree(g, bad))
    return None


def _mut_dual_chain(a: Artifacts, rng) -> Mutant | None:
    dco = a.dual_ordering
    ks = [k for k, grp in enumerate(dco.ordering.groups) if k > 0 and len(grp) > 1]
    if not ks:
        return None
    k = ks[int(rng.integers(len(ks)))]
    bad = _groups_with(dco.ordering, k, dco.ordering.groups[k][::-1])
    return Mutant(f"reverse dual group {k + 1}", lambda: validate_canonical_ordering(dco.graph, bad))


def _mut_reverse_rotation(a: Artifacts, rng) -> Mutant | None:
    g = a.g
    v = int(rng.integers(g.n))
    rot = g.rotations()
    rot[v] = rot[v][::-1]

    def check() -> ValidationReport:
        rep = ValidationReport()
        try:
            build_graph(rot)
        except GraphBuildError as exc:
            rep.add("embedding", v, f"{type(exc).__name__}: {exc}")
        return rep

    return Mutant(f"reverse rotation at {v}", check)


def _mut_remove_h_edge(a: Artifacts, rng) -> Mutant | None:
    H = a.result.H
    es = sorted(H.edges)
    e = es[int(rng.integers(len(es)))]
    tags = list(H.tags)
    tags[e] = 0
    bad = HSubgraph(tuple(tags))
    return Mutant(f"drop H-edge {e}", lambda: check_h_edges(a.g, a.annotation, bad))


MUTATIONS: tuple[Mutation, ...] = (
    Mutation("swap-groups", _mut_swap_groups),
    Mutation("reverse-chain", _mut_reverse_chain),
    Mutation("move-vertex", _mut_move_vertex),
    Mutation("swap-v1", _mut_swap_v1),
    Mutation("flip-edge", _mut_flip_edge),
    Mutation("relabel", _mut_relabel),
    Mutation("wrong-parent", _mut_wrong_parent),
    Mutation("drop-tree-edge", _mut_drop_tree_edge),
    Mutation("cycle-swap", _mut_cycle_swap),
    Mutation("non-h-exchange", _mut_non_h_exchange),
    Mutation("dual-chain", _mut_dual_chain),
    Mutation("reverse-rotation", _mut_reverse_rotation),
    Mutation("remove-h-edge", _mut_remove_h_edge),
)


@dataclass(frozen=True)
class MutationOutcome:
    kind: str
    description: str
    detected: bool
    checks: tuple[str, ...]


def run_mutations(g: PlanarGraph, seed: int = 0, repeats: int = 1) -> list[MutationOutcome]:
    """Apply every applicable mutation kind ``repeats`` times and record
    whether its checker rejects the result."""
    from .generators import rng_for

    rng = rng_for(seed)
    art = Artifacts.build(g)
    outcomes = []
    for mut in MUTATIONS:
        for _ in range(repeats):
            mutant = mut.apply(art, rng)
            if mutant is None:
                continue
            rep = mutant.check()
            outcomes.append(MutationOutcome(mut.name, mutant.description, not rep.ok, tuple(sorted(rep.checks()))))
    return outcomes


__all__ = [
    "CHAIN_RULES",
    "Artifacts",
    "MUTATIONS",
    "Mutation",
    "MutationOutcome",
    "best_degree_pair",
    "check_annotation",
    "check_barnette",
    "check_five_tree",
    "check_h_edges",
    "check_label_grammar",
    "check_labels",
    "check_orientation",
    "check_parent_lemma",
    "degree_profile",
    "derive_labels",
    "enumerate_spanning_trees",
    "h_edges_reference",
    "matrix_tree_count",
    "run_mutations",
    "verify_cotree",
    "verify_pipeline",
    "verify_spanning_tree",
]
