"""Spanning trees read off a canonical ordering.

``barnette_tree`` keeps the parent-edges: a spanning tree of maximum degree 3
with no control over the co-tree.  ``five_tree`` restricts itself to the
H-edges of the graph, forces in the H-edges whose duals are not H-edges of
the dual, and completes them to a spanning tree with a two-bucket Prim.  Tree
and co-tree then both have maximum degree at most 5.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _kernels as _k
from .canonical import (
    CanonicalOrdering,
    EdgeAnnotation,
    annotate,
    compute_canonical_ordering,
)
from .dual_order import DualCanonicalOrdering, dual_canonical_ordering
from .errors import (
    AugmentationNotThreeConnected,
    InternalInvariantBroken,
    NotASpanningTree,
    NotThreeConnected,
    PreconditionDegree,
)
from .planar import DualGraph, PlanarGraph, build_graph, dual, is_three_connected

H1, H2, H3, H4 = 1, 2, 4, 8
TAG_NAMES = ((H1, "H1"), (H2, "H2"), (H3, "H3"), (H4, "H4"))


class _DSU:
    __slots__ = ("p",)

    def __init__(self, n: int) -> None:
        self.p = list(range(n))

    def find(self, x: int) -> int:
        p = self.p
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.p[a] = b
        return True


# ----------------------------------------------------------------------
# Tree / co-tree pairs


@dataclass(frozen=True)
class SpanningTreePair:
    """A spanning tree of ``G`` and its co-tree in ``G*``.

    Both sets hold edge ids; dual edge ``e`` crosses primal edge ``e``.
    """

    tree_edges: frozenset[int]
    cotree_edges: frozenset[int]
    max_deg_tree: int
    max_deg_cotree: int

    @property
    def degree_profile(self) -> tuple[int, int]:
        return self.max_deg_tree, self.max_deg_cotree

    def to_dict(self, g: PlanarGraph) -> dict:
        head, face_of = g.head, g.face_of
        tree = sorted(sorted((head[2 * e + 1], head[2 * e])) for e in self.tree_edges)
        cot = sorted(sorted((face_of[2 * e], face_of[2 * e + 1])) for e in self.cotree_edges)
        return {
            "tree": tree,
            "cotree": cot,
            "max_deg_tree": self.max_deg_tree,
            "max_deg_cotree": self.max_deg_cotree,
        }

    def to_json(self, g: PlanarGraph) -> str:
        return json.dumps(self.to_dict(g))


def _ends(g: PlanarGraph, edges: np.ndarray, dual_side: bool = False) -> tuple[np.ndarray, np.ndarray]:
    arr = g.arrays().face_of if dual_side else g.arrays().head
    return arr[2 * edges], arr[2 * edges + 1]


def _tree_and_cotree(g: PlanarGraph, tree_edges: Iterable[int]) -> tuple[np.ndarray, np.ndarray, int, int]:
    tree = np.unique(np.fromiter(tree_edges, dtype=np.int64))
    if len(tree) != g.n - 1 or (len(tree) and (tree[0] < 0 or tree[-1] >= g.m)):
        raise NotASpanningTree(f"expected {g.n - 1} distinct edges of the graph, got {len(tree)}")
    acyclic, dt, _ = _k.forest_degree(g.n, *_ends(g, tree))
    if not acyclic:
        raise NotASpanningTree("edge set contains a cycle")
    mask = np.ones(g.m, dtype=np.bool_)
    mask[tree] = False
    rest = np.flatnonzero(mask)
    acyclic, dc, _ = _k.forest_degree(g.num_faces, *_ends(g, rest, dual_side=True))
    if not acyclic:
        raise InternalInvariantBroken("co-tree contains a cycle")
    return tree, rest, int(dt), int(dc)


def co_tree(g: PlanarGraph, tree_edges: Iterable[int]) -> frozenset[int]:
    """Duals of the non-tree edges; checked to span the dual acyclically."""
    return frozenset(_tree_and_cotree(g, tree_edges)[1].tolist())


def make_pair(g: PlanarGraph, tree_edges: Iterable[int]) -> SpanningTreePair:
    tree, rest, dt, dc = _tree_and_cotree(g, tree_edges)
    return SpanningTreePair(frozenset(tree.tolist()), frozenset(rest.tolist()), dt, dc)


# ----------------------------------------------------------------------
# Parent-edge trees


def barnette_tree(g: PlanarGraph, annot: EdgeAnnotation | None = None) -> SpanningTreePair:
    """Spanning tree formed by the parent-edges; maximum degree 3."""
    if annot is None:
        annot = annotate(g, compute_canonical_ordering(g))
    return make_pair(g, annot.parent_edges())


def common_faces(g: PlanarGraph, u: int, w: int) -> list[int]:
    fw = {g.face_of[d] for d in g.darts_around(w)}
    return sorted({g.face_of[d] for d in g.darts_around(u)} & fw)


def augment(g: PlanarGraph, u: int, w: int, face: int | None = None) -> PlanarGraph:
    """``g`` plus edge ``(u, w)`` drawn through ``face``, rooted with ``v1 = u``,
    ``vn = w`` and the outer face on the left of ``u -> w``."""
    if g.has_edge(u, w):
        raise AugmentationNotThreeConnected(f"{u} and {w} are already adjacent")
    faces = common_faces(g, u, w)
    if face is None:
        if not faces:
            raise AugmentationNotThreeConnected(f"{u} and {w} share no face")
        face = faces[0]
    elif face not in faces:
        raise AugmentationNotThreeConnected(f"face {face} does not contain both {u} and {w}")
    rot = g.rotations()
    for a, b in ((u, w), (w, u)):
        d = next(d for d in g.darts_around(a) if g.face_of[d] == face)
        r = rot[a]
        r.insert(r.index(g.head[d]), b)
    r = rot[u]
    return build_graph(rot, roots=(u, r[r.index(w) - 1], w))


def constrained_barnette(
    g: PlanarGraph, u: int, w: int, face: int | None = None, bound: int = 500
) -> SpanningTreePair:
    """3-tree of ``g`` in which ``u`` and ``w`` are leaves.

    ``u`` and ``w`` share a face ``f`` and ``g + (u, w)`` must be 3-connected.
    Every other vertex of ``f`` has tree-degree at most 2.
    """
    h = augment(g, u, w, face)
    if h.n <= bound and not is_three_connected(h, bound=bound):
        raise AugmentationNotThreeConnected(f"adding ({u}, {w}) does not give a 3-connected graph")
    try:
        co = compute_canonical_ordering(h)
    except NotThreeConnected as exc:
        raise AugmentationNotThreeConnected(str(exc)) from exc
    an = annotate(h, co)
    tree = []
    for he in an.parent_edges():
        a, b = h.head[2 * he + 1], h.head[2 * he]
        if {a, b} == {u, w}:
            raise InternalInvariantBroken("augmenting edge became a parent-edge")
        tree.append(g.dart(a, b) >> 1)
    return make_pair(g, tree)


# ----------------------------------------------------------------------
# H-edges


@dataclass(frozen=True)
class HSubgraph:
    """H-edges as a bitmask per edge id (0 for non-H edges)."""

    tags: tuple[int, ...]

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(e for e, t in enumerate(self.tags) if t)

    def array(self) -> np.ndarray:
        """Tags as an int64 array, cached."""
        cached = self.__dict__.get("_array")
        if cached is None:
            cached = np.array(self.tags, dtype=np.int64)
            object.__setattr__(self, "_array", cached)
        return cached

    def __contains__(self, e: int) -> bool:
        return bool(self.tags[e])

    def tag_names(self, e: int) -> list[str]:
        return [name for bit, name in TAG_NAMES if self.tags[e] & bit]

    def degrees(self, g: PlanarGraph) -> list[int]:
        deg = [0] * g.n
        head = g.head
        for e, t in enumerate(self.tags):
            if t:
                deg[head[2 * e]] += 1
                deg[head[2 * e + 1]] += 1
        return deg

    def is_connected(self, g: PlanarGraph) -> bool:
        dsu = _DSU(g.n)
        parts = g.n
        for e, t in enumerate(self.tags):
            if t and dsu.union(g.head[2 * e], g.head[2 * e + 1]):
                parts -= 1
        return parts == 1


def h_edges(g: PlanarGraph, annot: EdgeAnnotation) -> HSubgraph:
    """Edges passing any of the four rules, tagged with every rule they pass:
    H1 intra-edge, H2 NNW-edge of its tail, H3 NNE-edge of its tail, H4
    parent-edge of its head that is the N-edge of its tail."""
    A = g.arrays()
    tags = _k.h_tags(
        g.n, A.head, A.cw_next,
        annot.array("group"), annot.array("labels"),
        annot.array("first_out"), annot.array("last_out"), annot.array("parent"),
    )
    H = HSubgraph(tuple(tags.tolist()))
    object.__setattr__(H, "_array", np.asarray(tags, dtype=np.int64))
    return H


def h_zero(g: PlanarGraph, H: HSubgraph, Hstar: HSubgraph) -> frozenset[int]:
    """H-edges whose duals are not H-edges of the dual; must be a forest."""
    h0 = np.flatnonzero((H.array() != 0) & (Hstar.array() == 0))
    acyclic, _, _ = _k.forest_degree(g.n, *_ends(g, h0))
    if not acyclic:
        raise InternalInvariantBroken("H0 contains a cycle")
    return frozenset(h0.tolist())


# ----------------------------------------------------------------------
# Five-tree


def prim_two_buckets(g: PlanarGraph, weight: Sequence[int], start: int) -> list[int]:
    """Minimum spanning tree for weights in ``{0, 1}``; ``-1`` excludes an edge.

    Bucket 0 is always drained before bucket 1; inside a bucket the smallest
    edge id wins.
    """
    A = g.arrays()
    tree = _k.prim_two_buckets(g.n, A.head, A.cw_next, A.vdart, np.asarray(weight, dtype=np.int64), start)
    if len(tree) != g.n - 1:
        raise InternalInvariantBroken("weighted subgraph is disconnected")
    return tree.tolist()


@dataclass(frozen=True)
class FiveTreeResult:
    ordering: CanonicalOrdering
    annotation: EdgeAnnotation
    dual_ordering: DualCanonicalOrdering
    H: HSubgraph
    Hstar: HSubgraph
    H0: frozenset[int]
    pair: SpanningTreePair


def five_tree_pipeline(
    g: PlanarGraph,
    co: CanonicalOrdering | None = None,
    annot: EdgeAnnotation | None = None,
    D: DualGraph | None = None,
) -> FiveTreeResult:
    if co is None:
        co = compute_canonical_ordering(g)
    if annot is None:
        annot = annotate(g, co)
    if D is None:
        D = dual(g)
    dco = dual_canonical_ordering(g, co, annot, D)
    H = h_edges(g, annot)
    Hs = h_edges(D.graph, dco.annotation)
    H0 = h_zero(g, H, Hs)
    weight = np.where(H.array() != 0, 1, -1)
    weight[np.fromiter(H0, dtype=np.int64)] = 0
    tree = prim_two_buckets(g, weight, g.roots[0])
    return FiveTreeResult(co, annot, dco, H, Hs, H0, make_pair(g, tree))


def five_tree(g: PlanarGraph) -> SpanningTreePair:
    """Spanning tree whose tree and co-tree both have maximum degree at most 5."""
    return five_tree_pipeline(g).pair


# ----------------------------------------------------------------------
# Walks


@dataclass(frozen=True)
class Walk:
    """Closed walk around a spanning tree.

    ``faces`` lists the face of every corner passed, in walk order; a face
    visit is a maximal cyclic run of equal entries.
    """

    vertices: tuple[int, ...]
    darts: tuple[int, ...]
    faces: tuple[int, ...]
    vertex_visits: tuple[int, ...]
    face_visits: tuple[int, ...]

    @property
    def max_vertex_visits(self) -> int:
        return max(self.vertex_visits)

    @property
    def max_face_visits(self) -> int:
        return max(self.face_visits)

    def to_dict(self) -> dict:
        return {
            "walk": list(self.vertices),
            "max_vertex_visits": self.max_vertex_visits,
            "max_face_visits": self.max_face_visits,
            "face_visit_definition": "maximal run of consecutive corners on one face",
        }


def tree_to_walk(g: PlanarGraph, tree_edges: Iterable[int], limit: int = 5) -> Walk:
    """Clockwise traversal of the tree from ``v1``, leaving each vertex by the
    first tree edge after the one it arrived on."""
    tree = frozenset(tree_edges)
    pair = make_pair(g, tree)
    if pair.max_deg_tree > limit or pair.max_deg_cotree > limit:
        raise PreconditionDegree(
            f"tree degree {pair.max_deg_tree} and co-tree degree {pair.max_deg_cotree}; "
            f"both must be at most {limit}"
        )
    head, cw_next, face_of = g.head, g.cw_next, g.face_of
    n = g.n
    in_t = [False] * len(head)
    for e in tree:
        in_t[2 * e] = in_t[2 * e + 1] = True
    v1 = g.roots[0]
    d0 = g.vdart[v1]
    while not in_t[d0]:
        d0 = cw_next[d0]
    darts = []
    corners = []
    d = d0
    while True:
        darts.append(d)
        x = d ^ 1
        while True:
            y = cw_next[x]
            corners.append(face_of[y])
            if in_t[y]:
                break
            x = y
        d = y
        if d == d0:
            break
    verts = [head[x ^ 1] for x in darts] + [v1]
    vv = [0] * n
    for v in verts[:-1]:
        vv[v] += 1
    fv = [0] * g.num_faces
    k = len(corners)
    for i in range(k):
        if corners[i] != corners[i - 1]:
            fv[corners[i]] += 1
    if k and all(c == corners[0] for c in corners):
        fv[corners[0]] = 1
    return Walk(tuple(verts), tuple(darts), tuple(corners), tuple(vv), tuple(fv))


def to_dot(g: PlanarGraph, pair: SpanningTreePair, H: HSubgraph | None = None) -> str:
    """DOT drawing: tree edges bold, H-edges annotated with their rule tags."""
    lines = ["graph T {"]
    for e in range(g.m):
        u, v = g.head[2 * e + 1], g.head[2 * e]
        attrs = []
        if e in pair.tree_edges:
            attrs.append("style=bold")
        if H is not None and H.tags[e]:
            attrs.append(f'label="{"+".join(H.tag_names(e))}"')
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tag_histogram(H: HSubgraph) -> Counter:
    c: Counter = Counter()
    for e, t in enumerate(H.tags):
        for bit, name in TAG_NAMES:
            if t & bit:
                c[name] += 1
    return c
