"""Embedded planar graphs as dart (half-edge) structures.

Conventions used throughout the package:

* Rotations list neighbours in clockwise order.
* Edge ``e`` owns darts ``2e`` and ``2e + 1``; the twin of dart ``d`` is ``d ^ 1``.
  Dart ``2e`` points from the smaller to the larger endpoint.
* ``face_of[d]`` is the face to the *left* of dart ``d``.  Walking a face uses
  ``next(d) = cw_next[d ^ 1]``, which visits interior faces counter-clockwise.
* The outer face contains the consecutive darts ``v2 -> v1 -> vn``, so that
  ``v2`` is the counter-clockwise and ``vn`` the clockwise outer neighbour of ``v1``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    BadRoots,
    EulerViolation,
    NonSymmetricAdjacency,
    OuterFaceNotFound,
    ParallelOrLoopEdge,
    TooLargeForBruteCheck,
    VertexOutOfRange,
)


class GraphArrays(NamedTuple):
    head: np.ndarray
    cw_next: np.ndarray
    cw_prev: np.ndarray
    vdart: np.ndarray
    face_of: np.ndarray
    faces: np.ndarray


class PlanarGraph:
    """Immutable rooted plane graph.

    Build instances with :func:`build_graph` or :func:`from_faces`; the
    constructor trusts its arrays.
    """

    __slots__ = (
        "n", "m", "head", "cw_next", "cw_prev", "vdart", "face_of", "faces",
        "outer_face", "roots", "_dart_index", "_face_size", "_arrays",
    )

    def __init__(self, n, head, cw_next, cw_prev, vdart, face_of, faces, outer_face, roots):
        self.n: int = n
        self.m: int = len(head) // 2
        self.head: tuple[int, ...] = tuple(head)
        self.cw_next: tuple[int, ...] = tuple(cw_next)
        self.cw_prev: tuple[int, ...] = tuple(cw_prev)
        self.vdart: tuple[int, ...] = tuple(vdart)
        self.face_of: tuple[int, ...] = tuple(face_of)
        self.faces: tuple[int, ...] = tuple(faces)
        self.outer_face: int = outer_face
        self.roots: tuple[int, int, int] = tuple(roots)
        self._dart_index: dict[int, int] | None = None
        self._face_size: tuple[int, ...] | None = None
        self._arrays: GraphArrays | None = None

    def arrays(self) -> "GraphArrays":
        """The dart arrays as int64 numpy arrays (cached), for compiled kernels."""
        if self._arrays is None:
            self._arrays = GraphArrays(*(
                np.array(x, dtype=np.int64)
                for x in (self.head, self.cw_next, self.cw_prev, self.vdart, self.face_of, self.faces)
            ))
        return self._arrays

    # -- basic queries -------------------------------------------------

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def v1(self) -> int:
        return self.roots[0]

    @property
    def v2(self) -> int:
        return self.roots[1]

    @property
    def vn(self) -> int:
        return self.roots[2]

    def tail(self, d: int) -> int:
        return self.head[d ^ 1]

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.head[2 * e + 1], self.head[2 * e]

    def edges(self) -> list[tuple[int, int]]:
        h = self.head
        return [(h[2 * e + 1], h[2 * e]) for e in range(self.m)]

    def dart(self, u: int, v: int) -> int:
        """Dart from ``u`` to ``v``; ``KeyError`` if they are not adjacent."""
        if self._dart_index is None:
            n, h = self.n, self.head
            self._dart_index = {h[d ^ 1] * n + h[d]: d for d in range(len(h))}
        return self._dart_index[u * self.n + v]

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.dart(u, v)
        except KeyError:
            return False
        return True

    def darts_around(self, v: int) -> Iterator[int]:
        """Darts leaving ``v`` in clockwise order, starting at ``vdart[v]``."""
        start = d = self.vdart[v]
        nxt = self.cw_next
        while True:
            yield d
            d = nxt[d]
            if d == start:
                return

    def neighbours(self, v: int) -> list[int]:
        h = self.head
        return [h[d] for d in self.darts_around(v)]

    def degree(self, v: int) -> int:
        return sum(1 for _ in self.darts_around(v))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        h = self.head
        for d in range(0, len(h), 2):
            deg[h[d]] += 1
            deg[h[d + 1]] += 1
        return deg

    def face_next(self, d: int) -> int:
        return self.cw_next[d ^ 1]

    def face_darts(self, f: int) -> list[int]:
        start = d = self.faces[f]
        nxt = self.cw_next
        out = []
        while True:
            out.append(d)
            d = nxt[d ^ 1]
            if d == start:
                return out

    def face_vertices(self, f: int) -> list[int]:
        h = self.head
        return [h[d ^ 1] for d in self.face_darts(f)]

    def face_sizes(self) -> tuple[int, ...]:
        if self._face_size is None:
            size = [0] * len(self.faces)
            for f in self.face_of:
                size[f] += 1
            self._face_size = tuple(size)
        return self._face_size

    def rotations(self) -> list[list[int]]:
        return [self.neighbours(v) for v in range(self.n)]

    def outer_cycle(self) -> list[int]:
        """Outer face vertices in trace order, starting ``v1, vn, ..., v2``."""
        d0 = self.dart(self.v1, self.vn)
        out, d = [], d0
        while True:
            out.append(self.head[d ^ 1])
            d = self.cw_next[d ^ 1]
            if d == d0:
                return out

    def adjacency(self) -> list[list[int]]:
        return self.rotations()

    # -- serialisation ------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rotations": self.rotations(),
            "outer": self.outer_cycle(),
            "roots": list(self.roots),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"PlanarGraph(n={self.n}, m={self.m}, f={self.num_faces}, roots={self.roots})"


def build_graph(
    rotations: Sequence[Sequence[int]],
    outer: Sequence[int] | None = None,
    roots: Sequence[int] | None = None,
) -> PlanarGraph:
    """Validate a clockwise rotation system and return a rooted :class:`PlanarGraph`.

    ``outer`` is a witness for the outer face (its boundary vertices in cyclic
    order, either direction).  When ``roots`` is omitted the smallest outer
    vertex becomes ``v1``.  When both are omitted vertex 0 is ``v1`` and the
    outer face is the face left of the dart from 0 to its first listed
    neighbour.
    """
    n = len(rotations)
    rot = [list(map(int, r)) for r in rotations]
    listed = set()
    for v, r in enumerate(rot):
        if len(set(r)) != len(r):
            raise ParallelOrLoopEdge(f"vertex {v} lists a neighbour twice")
        for u in r:
            if not 0 <= u < n:
                raise VertexOutOfRange(f"vertex {v} lists out-of-range neighbour {u}")
            if u == v:
                raise ParallelOrLoopEdge(f"self-loop at vertex {v}")
            listed.add(v * n + u)
    for key in listed:
        v, u = divmod(key, n)
        if u * n + v not in listed:
            raise NonSymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")

    index: dict[int, int] = {}
    head: list[int] = []
    for v, r in enumerate(rot):
        for u in r:
            if v < u:
                index[v * n + u] = len(head)
                head.append(u)
                index[u * n + v] = len(head)
                head.append(v)
    nd = len(head)
    cw_next = [0] * nd
    cw_prev = [0] * nd
    vdart = [-1] * n
    for v, r in enumerate(rot):
        if not r:
            continue
        ds = [index[v * n + u] for u in r]
        vdart[v] = ds[0]
        k = len(ds)
        for i in range(k):
            a, b = ds[i], ds[(i + 1) % k]
            cw_next[a] = b
            cw_prev[b] = a
    if n == 0 or min(vdart) < 0:
        raise EulerViolation("graph has an isolated vertex")
    face_of, faces = _trace_faces(cw_next)
    m = nd // 2
    if len(faces) != m - n + 2:
        raise EulerViolation(
            f"face trace gives f={len(faces)} but n - m + f = 2 requires f={m - n + 2}"
        )
    if not _connected(n, head, vdart, cw_next):
        raise EulerViolation("graph is not connected")

    def dart(u: int, v: int) -> int:
        try:
            return index[u * n + v]
        except KeyError:
            raise BadRoots(f"{u} and {v} are not adjacent") from None

    if outer is not None:
        outer_face = _match_outer(rot, outer, index, n, face_of, cw_next, head)
        if roots is None:
            v1 = min(outer)
            d = next(d for d in _around(vdart[v1], cw_next) if face_of[d] == outer_face)
            vn = head[d]
            v2 = head[cw_prev[d]]
            roots = (v1, v2, vn)
    elif roots is None:
        v1 = 0
        roots = (0, rot[0][-1], rot[0][0])
    v1, v2, vn = (int(x) for x in roots)
    if len({v1, v2, vn}) != 3:
        raise BadRoots(f"roots must be distinct, got {roots}")
    if outer is None:
        outer_face = face_of[dart(v1, vn)]
    if face_of[dart(v1, vn)] != outer_face or face_of[dart(v2, v1)] != outer_face:
        raise BadRoots(
            f"roots {roots}: v2 must be the ccw and vn the cw neighbour of v1 on the outer face"
        )
    g = PlanarGraph(n, head, cw_next, cw_prev, vdart, face_of, faces, outer_face, (v1, v2, vn))
    g._dart_index = index
    return g


def _around(start: int, cw_next) -> Iterator[int]:
    d = start
    while True:
        yield d
        d = cw_next[d]
        if d == start:
            return


def _trace_faces(cw_next: Sequence[int]) -> tuple[list[int], list[int]]:
    nd = len(cw_next)
    face_of = [-1] * nd
    faces: list[int] = []
    for d0 in range(nd):
        if face_of[d0] >= 0:
            continue
        f = len(faces)
        faces.append(d0)
        d = d0
        while face_of[d] < 0:
            face_of[d] = f
            d = cw_next[d ^ 1]
    return face_of, faces


def _connected(n, head, vdart, cw_next) -> bool:
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for d in _around(vdart[v], cw_next):
            u = head[d]
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == n


def _match_outer(rot, outer, index, n, face_of, cw_next, head) -> int:
    w = [int(x) for x in outer]
    if len(w) < 3:
        raise OuterFaceNotFound("outer witness needs at least three vertices")
    for a, b in zip(w, w[1:] + w[:1]):
        if a * n + b not in index:
            raise OuterFaceNotFound(f"witness edge ({a},{b}) is not an edge")
    for cand in (w, w[::-1]):
        d0 = index[cand[0] * n + cand[1]]
        seq, d = [], d0
        while True:
            seq.append(head[d ^ 1])
            d = cw_next[d ^ 1]
            if d == d0 or len(seq) > len(cand):
                break
        if seq == cand:
            return face_of[d0]
    raise OuterFaceNotFound(f"no face has boundary {w}")


# ----------------------------------------------------------------------
# Construction helpers


def orient_faces(faces: Sequence[Sequence[int]]) -> list[list[int]]:
    """Orient unoriented face cycles of a closed surface consistently.

    Neighbouring faces traverse their shared edge in opposite directions.
    The first face keeps its given direction.
    """
    faces = [list(f) for f in faces]
    by_edge: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(faces):
        for a, b in zip(f, f[1:] + f[:1]):
            by_edge.setdefault((min(a, b), max(a, b)), []).append(i)
    done = [False] * len(faces)
    out: list[list[int] | None] = [None] * len(faces)
    for root in range(len(faces)):
        if done[root]:
            continue
        done[root] = True
        out[root] = faces[root]
        queue = deque([root])
        while queue:
            i = queue.popleft()
            f = out[i]
            for a, b in zip(f, f[1:] + f[:1]):
                for j in by_edge[(min(a, b), max(a, b))]:
                    if j == i or done[j]:
                        continue
                    g = faces[j]
                    darts = set(zip(g, g[1:] + g[:1]))
                    out[j] = g[::-1] if (a, b) in darts else g
                    done[j] = True
                    queue.append(j)
    return out  # type: ignore[return-value]


def rotations_from_faces(n: int, faces: Iterable[Sequence[int]]) -> list[list[int]]:
    """Clockwise rotations from consistently oriented faces.

    Each face lists its vertices in the order a left-face walk visits them, so
    at ``f[i]`` the clockwise successor of ``f[i-1]`` is ``f[i+1]``.
    """
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in faces:
        k = len(f)
        for i in range(k):
            succ[f[i]][f[i - 1]] = f[(i + 1) % k]
    rot = []
    for v in range(n):
        s = succ[v]
        if not s:
            rot.append([])
            continue
        start = min(s)
        r = [start]
        u = s[start]
        while u != start:
            r.append(u)
            u = s[u]
        rot.append(r)
    return rot


def from_faces(
    n: int,
    faces: Sequence[Sequence[int]],
    roots: Sequence[int] | None = None,
    orient: bool = False,
) -> PlanarGraph:
    if orient:
        faces = orient_faces(faces)
    return build_graph(rotations_from_faces(n, faces), roots=roots)


def reroot(g: PlanarGraph, roots: Sequence[int]) -> PlanarGraph:
    """Same embedding with new roots; the outer face follows from ``v1 -> vn``."""
    return build_graph(g.rotations(), roots=roots)


def rooted_at_face(g: PlanarGraph, v1: int, vn: int) -> PlanarGraph:
    """Re-root so that the face left of ``v1 -> vn`` is outer."""
    d = g.dart(v1, vn)
    v2 = g.head[g.cw_prev[d]]
    return reroot(g, (v1, v2, vn))


# ----------------------------------------------------------------------
# Dual


@dataclass(frozen=True)
class DualGraph:
    """Dual of a rooted plane graph.

    Dual vertices are primal face ids and dual dart ``d`` crosses primal dart
    ``d`` from its left face to its right face, so the edge bijection is the
    identity on edge ids.  Dual face ``v`` is primal vertex ``v``.
    """

    primal: PlanarGraph
    graph: PlanarGraph

    def dual_edge(self, e: int) -> int:
        return e

    def primal_edge(self, e: int) -> int:
        return e

    def left_face(self, d: int) -> int:
        return self.primal.face_of[d]

    def right_face(self, d: int) -> int:
        return self.primal.face_of[d ^ 1]

    @property
    def bijection(self) -> range:
        return range(self.primal.m)


def dual(g: PlanarGraph) -> DualGraph:
    A = g.arrays()
    nd = len(g.head)
    darts = np.arange(nd, dtype=np.int64)
    twin = darts ^ 1
    face_next = A.cw_next[twin]
    face_prev = np.empty_like(face_next)
    face_prev[face_next] = darts
    dhead = A.face_of[twin]
    # Dual faces are primal vertices; face v is traced from a dart entering v.
    dfaces = A.vdart ^ 1
    v1, v2, vn = g.roots
    f1 = g.outer_face
    f2 = g.face_of[g.dart(vn, v1)]
    fphi = g.face_of[g.dart(v1, v2)]
    dg = PlanarGraph(
        len(g.faces), dhead.tolist(), face_prev.tolist(), face_next.tolist(), g.faces,
        g.head, dfaces.tolist(), v1, (f1, f2, fphi),
    )
    dg._arrays = GraphArrays(dhead, face_prev, face_next, A.faces, A.head, dfaces)
    return DualGraph(g, dg)


# ----------------------------------------------------------------------
# Connectivity


def _biconnected(n: int, adj: Sequence[Sequence[int]], removed: int = -1) -> bool:
    """True iff the graph minus ``removed`` is connected with no cut vertex."""
    verts = [v for v in range(n) if v != removed]
    if len(verts) < 3:
        return len(verts) == 2 and verts[1] in adj[verts[0]]
    root = verts[0]
    disc = [-1] * n
    low = [0] * n
    if removed >= 0:
        disc[removed] = -2
    disc[root] = low[root] = 0
    t = 1
    root_children = 0
    stack = [(root, -1, iter(adj[root]))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -2 or u == parent:
                continue
            if disc[u] == -1:
                disc[u] = low[u] = t
                t += 1
                stack.append((u, v, iter(adj[u])))
                advanced = True
                break
            low[v] = min(low[v], disc[u])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if parent == root:
                root_children += 1
            elif low[v] >= disc[parent]:
                return False
    return t == len(verts) and root_children == 1


def _connected_without(n: int, adj, gone: set[int]) -> bool:
    verts = [v for v in range(n) if v not in gone]
    if not verts:
        return True
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in gone and u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def is_three_connected(
    g: PlanarGraph, bound: int = 500, force: bool = False, method: str = "cut-vertex"
) -> bool:
    """True iff ``n >= 4`` and deleting any two vertices leaves a connected graph.

    ``method="pairs"`` deletes every vertex pair literally; the default deletes
    each vertex and looks for a cut vertex in the rest, which decides the same
    property in O(n (n + m)).
    """
    if g.n > bound and not force:
        raise TooLargeForBruteCheck(f"n={g.n} exceeds brute-force bound {bound}")
    if g.n < 4:
        return False
    adj = g.rotations()
    if method == "pairs":
        return all(
            _connected_without(g.n, adj, {u, v})
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
    if method != "cut-vertex":
        raise ValueError(f"unknown method {method!r}")
    return all(_biconnected(g.n, adj, u) for u in range(g.n))


# ----------------------------------------------------------------------
# IO


def load_graph(path) -> PlanarGraph:
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def graph_from_dict(data: dict) -> PlanarGraph:
    rot = data["rotations"]
    if int(data.get("n", len(rot))) != len(rot):
        raise NonSymmetricAdjacency(f"n={data['n']} but {len(rot)} rotation lists given")
    return build_graph(rot, data.get("outer"), data.get("roots"))


def to_dot(g: PlanarGraph, edge_attrs: dict[int, dict[str, str]] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        extra = ""
        if v in g.roots:
            extra = f' [xlabel="{("v1", "v2", "vn")[g.roots.index(v)]}"]'
        lines.append(f"  {v}{extra};")
    for e, (u, v) in enumerate(g.edges()):
        attrs = {"id": str(e)}
        if edge_attrs and e in edge_attrs:
            attrs.update(edge_attrs[e])
        body = ", ".join(f'{k}="{val}"' for k, val in attrs.items())
        lines.append(f"  {u} -- {v} [{body}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
