"""Canonical orderings of rooted 3-connected plane graphs.

The ordering is computed by reverse peeling: starting from the whole graph,
repeatedly delete ``vn``, then a legal singleton or chain from the current
outer contour, until only the face at ``(v1, v2)`` remains.  From an ordering
we derive the vertex enumeration, the edge orientation with parent-edges and
the eight compass labels.

Labels are small ints whose natural order is the clockwise order in which
they occur around a vertex: ``S < SW < W < NW < N < NE < E < SE``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels as _k
from .errors import NotThreeConnected
from .planar import PlanarGraph, _biconnected
from .report import ValidationReport

S, SW, W, NW, N, NE, E, SE = range(8)
LABELS = ("S", "SW", "W", "NW", "N", "NE", "E", "SE")
SINGLETON = "singleton"
CHAIN = "chain"


def mirror(label: int) -> int:
    """Label at the tail of an inter-edge given its label at the head."""
    return (label + 4) % 8


@dataclass(frozen=True)
class CanonicalOrdering:
    groups: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]

    @classmethod
    def from_groups(cls, groups: Sequence[Sequence[int]]) -> "CanonicalOrdering":
        gs = tuple(tuple(int(v) for v in grp) for grp in groups)
        kinds = tuple(SINGLETON if len(grp) == 1 else CHAIN for grp in gs)
        return cls(gs, kinds)

    @classmethod
    def from_flat(cls, seq: np.ndarray, starts: np.ndarray) -> "CanonicalOrdering":
        """Build from a flat vertex array and group offsets, keeping both as
        the cached :meth:`flat` view."""
        sl = seq.tolist()
        st = starts.tolist()
        groups = tuple(tuple(sl[a:b]) for a, b in zip(st, st[1:]))
        co = cls(groups, tuple(SINGLETON if len(x) == 1 else CHAIN for x in groups))
        object.__setattr__(co, "_flat", (seq, starts))
        return co

    @property
    def K(self) -> int:
        return len(self.groups)

    def flat(self) -> tuple[np.ndarray, np.ndarray]:
        """All vertices in group order plus the group start offsets (cached)."""
        cached = self.__dict__.get("_flat")
        if cached is None:
            seq = np.fromiter((v for grp in self.groups for v in grp), dtype=np.int64)
            starts = np.cumsum([0] + [len(grp) for grp in self.groups], dtype=np.int64)
            cached = (seq, starts)
            object.__setattr__(self, "_flat", cached)
        return cached

    def group_index(self, n: int) -> list[int]:
        """1-based group number of every vertex (0 if absent)."""
        gi = [0] * n
        for k, grp in enumerate(self.groups, start=1):
            for v in grp:
                gi[v] = k
        return gi

    def to_dict(self, idx: Sequence[int] | None = None) -> dict:
        out = {"groups": [list(g) for g in self.groups], "kinds": list(self.kinds)}
        if idx is not None:
            out["idx"] = list(idx)
        return out


# ----------------------------------------------------------------------
# Computing an ordering


ENGINES = ("compiled", "python")

_PEEL_ERRORS = {
    _k.STUCK: "peeling got stuck; the graph is not 3-connected or the roots are invalid",
    _k.NOT_SIMPLE: "outer face is not a simple cycle",
    _k.DUPLICATE: "a vertex would appear twice on the contour",
    _k.FINAL_MISMATCH: "final contour does not match the face at (v1, v2)",
}


def compute_canonical_ordering(g: PlanarGraph, engine: str = "compiled") -> CanonicalOrdering:
    """Canonical ordering of ``g`` for its fixed roots.

    Ties between removable groups go to the group holding the smallest
    vertex id, so both engines return the same ordering.  Raises
    :class:`NotThreeConnected` when peeling gets stuck.
    """
    if engine == "python":
        co = _peel_python(g)
        _check_peel(g, co)
        return co
    if engine != "compiled":
        raise ValueError(f"engine must be one of {ENGINES}")
    v1, v2, vn = g.roots
    f_phi = g.face_of[g.dart(v1, v2)]
    prot = np.zeros(g.n, dtype=np.bool_)
    prot[list(g.face_vertices(f_phi))] = True
    prot[v1] = prot[v2] = False
    if prot[vn]:
        raise NotThreeConnected("vn lies on the face at (v1, v2)")
    A = g.arrays()
    status, seq, starts = _k.peel(
        g.n, A.head, A.cw_next, A.face_of, A.vdart, A.faces,
        v1, v2, vn, g.outer_face, f_phi, prot,
    )
    if status != _k.OK:
        raise NotThreeConnected(_PEEL_ERRORS[status])
    # removal step j becomes group K - j (1-based); reorder the flat array to match
    sizes = np.diff(starts)
    key = np.repeat(np.arange(len(sizes) + 1, 1, -1), sizes)
    order = np.argsort(key, kind="stable")
    flat = np.concatenate((np.array([v1, v2], dtype=np.int64), seq[order]))
    offsets = np.concatenate(([0, 2], 2 + np.cumsum(sizes[::-1]))).astype(np.int64)
    co = CanonicalOrdering.from_flat(flat, offsets)
    gi = np.empty(g.n, dtype=np.int64)
    gi[seq] = key
    gi[[v1, v2]] = 1
    _check_peel(g, co, gi)
    return co


def _check_peel(g: PlanarGraph, co: CanonicalOrdering, gi: np.ndarray | None = None) -> None:
    """Linear-time guard for inputs that are not 3-connected.

    On such inputs peeling can finish with a vertex (other than ``vn``) that
    has no later neighbour; 3-connected inputs never trigger this.
    """
    A = g.arrays()
    if g.n < 4 or np.bincount(A.head, minlength=g.n).min() < 3:
        raise NotThreeConnected("a vertex has degree below 3")
    if gi is None:
        gi = np.array(co.group_index(g.n), dtype=np.int64)
    tails = A.head[np.arange(A.head.size) ^ 1]
    latest = np.zeros(g.n, dtype=np.int64)
    np.maximum.at(latest, tails, gi[A.head])
    latest[g.vn] = np.iinfo(np.int64).max
    bad = np.flatnonzero(latest <= gi)
    if bad.size:
        raise NotThreeConnected(f"vertex {int(bad[0])} has no later neighbour after peeling")


def _peel_python(g: PlanarGraph) -> CanonicalOrdering:
    n = g.n
    head, cw_next, face_of, vdart = g.head, g.cw_next, g.face_of, g.vdart
    v1, v2, vn = g.roots
    f_phi = face_of[g.dart(v1, v2)]
    nf = g.num_faces

    alive = [True] * n
    on_c = [False] * n
    cprev = [-1] * n
    cnext = [-1] * n
    cdeg = g.degrees()
    removed = [0] * n
    outv = [0] * nf
    oute = [0] * nf
    done = [False] * nf
    done[g.outer_face] = True
    prot = [False] * n
    for x in g.face_vertices(f_phi):
        prot[x] = True
    prot[v1] = prot[v2] = False
    if prot[vn]:
        raise NotThreeConnected("vn lies on the face at (v1, v2)")

    # contour v1 -> vn -> ... -> v2 along the outer face
    d = g.dart(v1, vn)
    contour = [v1]
    contour_darts = []
    while True:
        contour_darts.append(d)
        contour.append(head[d])
        if head[d] == v2:
            break
        d = cw_next[d ^ 1]
        if len(contour) > n:
            raise NotThreeConnected("outer face is not a simple cycle")
    for a, b in zip(contour, contour[1:]):
        cnext[a] = b
        cprev[b] = a
    for x in contour:
        if on_c[x]:
            raise NotThreeConnected("outer face is not a simple cycle")
        on_c[x] = True
        dd = vdart[x]
        while True:
            f = face_of[dd]
            if not done[f]:
                outv[f] += 1
            dd = cw_next[dd]
            if dd == vdart[x]:
                break
    for d in contour_darts:
        oute[face_of[d ^ 1]] += 1

    heap: list[tuple[int, int, int]] = []

    def separating(f: int) -> bool:
        return outv[f] > oute[f] + 1

    def vertex_ok(z: int) -> bool:
        if not alive[z] or not on_c[z] or prot[z] or z == v1 or z == v2:
            return False
        if removed[z] == 0 or cdeg[z] < 3:
            return False
        if cdeg[cprev[z]] < 3 or cdeg[cnext[z]] < 3:
            return False
        start = dd = vdart[z]
        while True:
            f = face_of[dd]
            if not done[f] and f != f_phi and outv[f] != oute[f] + 1:
                return False
            dd = cw_next[dd]
            if dd == start:
                return True

    def chain_info(f: int):
        if done[f] or f == f_phi or oute[f] < 2 or outv[f] != oute[f] + 1:
            return None
        start = dd = g.faces[f]
        darts = []
        while True:
            darts.append(dd)
            dd = cw_next[dd ^ 1]
            if dd == start:
                break
        k = len(darts)
        flags = []
        for dd in darts:
            t = head[dd ^ 1]
            flags.append(on_c[t] and cprev[t] == head[dd])
        i0 = -1
        for i in range(k):
            if flags[i] and not flags[i - 1]:
                if i0 >= 0:
                    return None
                i0 = i
        if i0 < 0:
            return None
        r = 0
        while flags[(i0 + r) % k]:
            r += 1
        if r != oute[f]:
            return None
        chain = [head[darts[(i0 + j) % k]] for j in range(r - 1)]
        chain.reverse()
        for z in chain:
            if prot[z] or removed[z] == 0 or cdeg[z] != 2:
                return None
        path = [darts[(i0 + r + j) % k] for j in range(k - r)]
        return chain, path

    def push_face(f: int) -> None:
        info = chain_info(f)
        if info is not None:
            heapq.heappush(heap, (min(info[0]), 1, f))

    def absorb(gone: Sequence[int], faces_rm: Sequence[int], path: Sequence[int]) -> None:
        touched = []
        changed: dict[int, bool] = {}
        for z in gone:
            alive[z] = False
            on_c[z] = False
        for z in gone:
            start = dd = vdart[z]
            while True:
                w = head[dd]
                if alive[w]:
                    cdeg[w] -= 1
                    removed[w] += 1
                    touched.append(w)
                dd = cw_next[dd]
                if dd == start:
                    break
        for f in faces_rm:
            done[f] = True
        prev = head[path[0] ^ 1]
        last = head[path[-1]]
        for dd in path:
            x = head[dd]
            cnext[prev] = x
            cprev[x] = prev
            prev = x
            tf = face_of[dd ^ 1]
            if tf not in changed:
                changed[tf] = separating(tf)
            oute[tf] += 1
            if x != last:
                if on_c[x]:
                    raise NotThreeConnected(f"vertex {x} would appear twice on the contour")
                on_c[x] = True
                touched.append(x)
                start = d2 = vdart[x]
                while True:
                    f = face_of[d2]
                    if not done[f]:
                        if f not in changed:
                            changed[f] = separating(f)
                        outv[f] += 1
                    d2 = cw_next[d2]
                    if d2 == start:
                        break
        touched.append(head[path[0] ^ 1])
        touched.append(last)
        pushed_v = set()
        pushed_f = set()
        for f, was in changed.items():
            if not done[f]:
                pushed_f.add(f)
                if was and not separating(f):
                    for x in g.face_vertices(f):
                        if on_c[x]:
                            pushed_v.add(x)
        for w in touched:
            if not alive[w]:
                continue
            pushed_v.add(w)
            if on_c[w]:
                pushed_v.add(cprev[w])
                pushed_v.add(cnext[w])
                # a chain face can only become legal through a degree-2 vertex
                if cdeg[w] == 2:
                    start = d2 = vdart[w]
                    while True:
                        f = face_of[d2]
                        if not done[f]:
                            pushed_f.add(f)
                        d2 = cw_next[d2]
                        if d2 == start:
                            break
        for x in pushed_v:
            if x >= 0 and vertex_ok(x):
                heapq.heappush(heap, (x, 0, x))
        for f in pushed_f:
            push_face(f)

    def remove_singleton(z: int) -> None:
        L, R = cprev[z], cnext[z]
        cur = vdart[z]
        while head[cur] != L:
            cur = cw_next[cur]
        faces_rm = []
        path = []
        while head[cur] != R:
            faces_rm.append(face_of[cur])
            e = cw_next[cur ^ 1]
            while head[e] != z:
                path.append(e)
                e = cw_next[e ^ 1]
            cur = e ^ 1
        absorb((z,), faces_rm, path)

    groups_rev: list[tuple[int, ...]] = [(vn,)]
    remaining = n - 3 - sum(prot)
    remove_singleton(vn)
    for x in range(n):
        if on_c[x] and vertex_ok(x):
            heapq.heappush(heap, (x, 0, x))
    for f in range(nf):
        push_face(f)

    while remaining > 0:
        if not heap:
            raise NotThreeConnected(
                f"peeling stuck with {remaining} removable vertices left; "
                "the graph is not 3-connected or the roots are invalid"
            )
        key, typ, x = heapq.heappop(heap)
        if typ == 0:
            if not vertex_ok(x):
                continue
            remove_singleton(x)
            groups_rev.append((x,))
            remaining -= 1
        else:
            info = chain_info(x)
            if info is None:
                continue
            chain, path = info
            if min(chain) != key:
                heapq.heappush(heap, (min(chain), 1, x))
                continue
            absorb(chain, (x,), path)
            groups_rev.append(tuple(chain))
            remaining -= len(chain)

    last = []
    x = cnext[v1]
    while x != v2:
        last.append(x)
        x = cnext[x]
        if len(last) > n:
            raise NotThreeConnected("contour corrupted")
    if sorted(last) != sorted(v for v in range(n) if prot[v]):
        raise NotThreeConnected("final contour does not match the face at (v1, v2)")
    groups_rev.append(tuple(last))
    groups_rev.append((v1, v2))
    return CanonicalOrdering.from_groups(groups_rev[::-1])


# ----------------------------------------------------------------------
# Enumeration, orientation and labels


@dataclass(frozen=True)
class EdgeAnnotation:
    """Orientation and labels derived from a canonical ordering.

    ``out[d]`` is true when dart ``d`` points along its edge's direction.
    ``labels[d]`` is the label of ``d``'s edge at the tail of ``d``.
    ``parent[v]`` is the dart ``parent -> v`` (``-1`` for ``v1``).
    """

    idx: tuple[int, ...]
    group: tuple[int, ...]
    out: tuple[bool, ...]
    parent: tuple[int, ...]
    first_out: tuple[int, ...]
    last_out: tuple[int, ...]
    labels: tuple[int, ...] | None = None

    def array(self, name: str) -> np.ndarray:
        """Field ``name`` as an int64 numpy array (cached)."""
        cache = self.__dict__.setdefault("_arrays", {})
        if name not in cache:
            cache[name] = np.array(getattr(self, name), dtype=np.int64)
        return cache[name]

    def oriented_dart(self, e: int) -> int:
        return 2 * e if self.out[2 * e] else 2 * e + 1

    def is_intra(self, g: PlanarGraph, e: int) -> bool:
        return self.group[g.head[2 * e]] == self.group[g.head[2 * e + 1]]

    def parent_edges(self) -> list[int]:
        return [d >> 1 for d in self.parent if d >= 0]

    def outgoing(self, g: PlanarGraph, v: int) -> list[int]:
        """Outgoing darts of ``v`` from the first to the last in clockwise order."""
        res = []
        d = self.first_out[v]
        if d < 0:
            return res
        while True:
            res.append(d)
            if d == self.last_out[v]:
                return res
            d = g.cw_next[d]
            if len(res) > g.m:
                return res

    def incoming(self, g: PlanarGraph, v: int) -> list[int]:
        """Darts ``v -> predecessor`` of incoming edges, clockwise from the first."""
        res = []
        lo = self.last_out[v]
        d = g.cw_next[lo] if lo >= 0 else g.vdart[v]
        while not self.out[d]:
            res.append(d)
            d = g.cw_next[d]
            if len(res) > g.m:
                break
        return res

    def label_names(self) -> list[str]:
        assert self.labels is not None
        return [LABELS[x] if x >= 0 else "?" for x in self.labels]


CHAIN_RULES = ("larger-first", "smaller-first")


def enumerate_vertices(
    g: PlanarGraph, co: CanonicalOrdering, chain_rule: str = "larger-first"
) -> list[int]:
    """``idx[v]`` in ``1..n``, consecutive within each group.

    A chain is numbered starting from the end whose earlier neighbour has
    the larger index (``"larger-first"``).  This is the direction the
    degree-3 argument for parent-edges relies on.  ``"smaller-first"`` starts
    from the other end; with it parent-edge trees can reach degree 5.
    """
    if chain_rule not in CHAIN_RULES:
        raise ValueError(f"chain_rule must be one of {CHAIN_RULES}")
    flip = chain_rule == "smaller-first"
    gi = co.group_index(g.n)
    idx = [0] * g.n
    s = 0
    for k, grp in enumerate(co.groups, start=1):
        if k == 1 or len(grp) == 1:
            order = grp
        else:
            h = _earlier_neighbour_idx(g, grp[0], k, gi, idx)
            i = _earlier_neighbour_idx(g, grp[-1], k, gi, idx)
            order = grp if (h > i) != flip else grp[::-1]
        for j, z in enumerate(order, start=1):
            idx[z] = s + j
        s += len(grp)
    return idx


def _earlier_neighbour_idx(g, z, k, gi, idx) -> int:
    best = 0
    for d in g.darts_around(z):
        u = g.head[d]
        if 0 < gi[u] < k:
            best = max(best, idx[u])
    return best


def orient_edges(g: PlanarGraph, co: CanonicalOrdering, idx: Sequence[int]) -> EdgeAnnotation:
    head, cw_next, cw_prev = g.head, g.cw_next, g.cw_prev
    nd = len(head)
    out = [False] * nd
    for e in range(g.m):
        a = idx[head[2 * e + 1]] < idx[head[2 * e]]
        out[2 * e] = a
        out[2 * e + 1] = not a
    v1, _, vn = g.roots
    dn = g.dart(vn, v1)
    out[dn] = True
    out[dn ^ 1] = False
    n = g.n
    parent = [-1] * n
    best = [0] * n
    first_out = [-1] * n
    last_out = [-1] * n
    for d in range(nd):
        if out[d]:
            h = head[d]
            t = head[d ^ 1]
            if d != dn and idx[t] > best[h]:
                best[h] = idx[t]
                parent[h] = d
            if not out[cw_prev[d]]:
                first_out[t] = d
            if not out[cw_next[d]]:
                last_out[t] = d
    return EdgeAnnotation(
        idx=tuple(idx),
        group=tuple(co.group_index(n)),
        out=tuple(out),
        parent=tuple(parent),
        first_out=tuple(first_out),
        last_out=tuple(last_out),
    )


def label_edges(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation) -> EdgeAnnotation:
    """Attach the compass labels to an oriented annotation.

    Darts left unlabelled by a malformed ordering keep the value ``-1``.
    """
    head, cw_next = g.head, g.cw_next
    out = annot.out
    gi = annot.group
    lab = [-1] * len(head)
    for k in range(2, co.K + 1):
        grp = co.groups[k - 1]
        if len(grp) == 1:
            z = grp[0]
            inc = annot.incoming(g, z)
            if not inc:
                continue
            for d in inc:
                lab[d] = S
            lab[inc[0]] = SE
            lab[inc[-1]] = SW
            for d in inc:
                lab[d ^ 1] = mirror(lab[d])
        else:
            for z, tag in ((grp[0], SW), (grp[-1], SE)):
                for d in g.darts_around(z):
                    if gi[head[d]] < k and not out[d]:
                        lab[d] = tag
                        lab[d ^ 1] = mirror(tag)
            for a, b in zip(grp, grp[1:]):
                try:
                    d = g.dart(a, b)
                except KeyError:
                    continue
                lab[d] = E
                lab[d ^ 1] = W
    v1, v2, vn = g.roots
    d = g.dart(v1, v2)
    lab[d] = E
    lab[d ^ 1] = W
    d = g.dart(v1, vn)
    lab[d] = S
    lab[d ^ 1] = N
    return EdgeAnnotation(
        annot.idx, annot.group, annot.out, annot.parent, annot.first_out, annot.last_out,
        tuple(lab),
    )


def annotate(
    g: PlanarGraph,
    co: CanonicalOrdering,
    chain_rule: str = "larger-first",
    engine: str = "compiled",
) -> EdgeAnnotation:
    """Enumeration, orientation and labels in one call."""
    if engine == "python":
        idx = enumerate_vertices(g, co, chain_rule)
        return label_edges(g, co, orient_edges(g, co, idx))
    if engine != "compiled":
        raise ValueError(f"engine must be one of {ENGINES}")
    if chain_rule not in CHAIN_RULES:
        raise ValueError(f"chain_rule must be one of {CHAIN_RULES}")
    gseq, gstart = co.flat()
    A = g.arrays()
    v1, v2, vn = g.roots
    res = _k.annotate(
        g.n, A.head, A.cw_next, A.cw_prev, A.vdart, gseq, gstart, v1, v2, vn,
        chain_rule == "smaller-first",
    )
    an = EdgeAnnotation(*(tuple(x.tolist()) for x in res))
    names = ("idx", "group", "out", "parent", "first_out", "last_out", "labels")
    object.__setattr__(an, "_arrays", {k: x.astype(np.int64, copy=False) for k, x in zip(names, res)})
    return an


def check_face_orientation(g: PlanarGraph, annot: EdgeAnnotation) -> ValidationReport:
    """Both faces at ``(v1, vn)`` are directed cycles; every other face has
    exactly one local source and one local sink."""
    rep = ValidationReport()
    out = annot.out
    v1, _, vn = g.roots
    dn = g.dart(vn, v1)
    special = {g.face_of[dn], g.face_of[dn ^ 1]}
    for f in range(g.num_faces):
        darts = g.face_darts(f)
        sources = sinks = 0
        prev = darts[-1]
        for d in darts:
            if out[d] and not out[prev]:
                sources += 1
            elif out[prev] and not out[d]:
                sinks += 1
            prev = d
        want = 0 if f in special else 1
        if sources != want or sinks != want:
            kind = "directed-cycle" if f in special else "two-paths"
            rep.add(kind, f, f"face has {sources} source(s) and {sinks} sink(s), expected {want}")
    return rep


# ----------------------------------------------------------------------
# Validation against the definition


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


def validate_canonical_ordering(
    g: PlanarGraph, co: CanonicalOrdering, brute: bool | None = None
) -> ValidationReport:
    """Check every clause of the canonical-ordering definition.

    With ``brute=True`` each prefix is tested for 2-connectivity by deleting
    every vertex in turn, and its outer face is traced explicitly.  The fast
    path (default above 30 vertices) tracks prefix faces with a union-find
    over the faces of ``g`` and certifies 2-connectivity by the ear argument,
    falling back to a cut-vertex search for prefixes that follow a bad group.
    """
    rep = ValidationReport()
    n = g.n
    v1, v2, vn = g.roots
    K = co.K
    seen = [0] * n
    for grp in co.groups:
        for v in grp:
            if not 0 <= v < n:
                rep.add("partition", v, "vertex id out of range")
                return rep
            seen[v] += 1
    bad = [v for v in range(n) if seen[v] != 1]
    if bad:
        rep.add("partition", bad[:10], "groups do not partition the vertex set")
        return rep
    if K < 2:
        rep.add("partition", K, "need at least two groups")
        return rep
    if tuple(co.groups[0]) != (v1, v2):
        rep.add("V1", 1, f"first group must be (v1, v2) = {(v1, v2)}, got {co.groups[0]}")
    if tuple(co.groups[-1]) != (vn,):
        rep.add("VK", K, f"last group must be (vn,) = {(vn,)}, got {co.groups[-1]}")
    if not g.has_edge(v1, v2):
        rep.add("edge-v1v2", 1, "edge (v1, v2) missing")
    if len(co.kinds) != K:
        rep.add("kind", None, "kinds and groups differ in length")
    gi = co.group_index(n)
    head = g.head
    ear_ok = [False] * (K + 1)
    ear_ok[1] = True
    for k in range(2, K + 1):
        grp = co.groups[k - 1]
        kind = co.kinds[k - 1] if k - 1 < len(co.kinds) else None
        earlier = []
        later = []
        for z in grp:
            ea = la = 0
            for d in g.darts_around(z):
                gu = gi[head[d]]
                if gu < k:
                    ea += 1
                elif gu > k:
                    la += 1
            earlier.append(ea)
            later.append(la)
        if len(grp) == 1:
            if kind != SINGLETON:
                rep.add("kind", k, "one-vertex group must be a singleton")
            if earlier[0] < 2:
                rep.add("singleton-earlier", k, f"vertex {grp[0]} has {earlier[0]} earlier neighbour(s)")
            if k < K and later[0] < 1:
                rep.add("singleton-later", k, f"vertex {grp[0]} has no later neighbour")
            ear_ok[k] = ear_ok[k - 1] and earlier[0] >= 2
            continue
        if kind != CHAIN:
            rep.add("kind", k, "multi-vertex group must be a chain")
        if k == K:
            rep.add("VK", k, "last group must be a singleton")
        path_ok = True
        members = set(grp)
        for i, z in enumerate(grp):
            inner = {head[d] for d in g.darts_around(z) if head[d] in members}
            want = set()
            if i > 0:
                want.add(grp[i - 1])
            if i + 1 < len(grp):
                want.add(grp[i + 1])
            if inner != want:
                path_ok = False
        if not path_ok:
            rep.add("chain-path", k, f"group {grp} does not induce the path in the listed order")
        ends_ok = earlier[0] == 1 and earlier[-1] == 1
        if not ends_ok:
            rep.add("chain-ends", k, f"end vertices have {earlier[0]} and {earlier[-1]} earlier neighbours")
        if any(earlier[1:-1]):
            rep.add("chain-interior", k, "an interior chain vertex has an earlier neighbour")
        if k < K and not all(later):
            rep.add("chain-later", k, "a chain vertex has no later neighbour")
        attach = []
        for z in (grp[0], grp[-1]):
            attach += [head[d] for d in g.darts_around(z) if gi[head[d]] < k]
        ear_ok[k] = (
            ear_ok[k - 1] and path_ok and ends_ok and not any(earlier[1:-1])
            and len(set(attach)) == 2
        )

    if brute is None:
        brute = n <= 30
    if brute:
        _prefix_checks_brute(g, co, gi, rep)
    else:
        _prefix_checks_fast(g, co, gi, ear_ok, rep)
    return rep


def _prefix_checks_fast(g, co, gi, ear_ok, rep) -> None:
    K = co.K
    head, face_of = g.head, g.face_of
    dsu = _DSU(g.num_faces)
    fo = g.outer_face
    outer_bad: dict[int, str] = {}
    for k in range(K, 1, -1):
        grp = co.groups[k - 1]
        root = dsu.find(fo)
        for z in grp:
            if not any(dsu.find(face_of[d]) == root for d in g.darts_around(z)):
                outer_bad[k] = f"vertex {z} is not on the outer face of the prefix"
                break
        if len(grp) > 1 and k not in outer_bad:
            for a, b in zip(grp, grp[1:]):
                if not g.has_edge(a, b):
                    break
                if dsu.find(face_of[g.dart(a, b)]) != root:
                    rep.add("chain-clockwise", k, f"chain {grp} is not clockwise on the prefix outer face")
                    break
        for z in grp:
            for d in g.darts_around(z):
                dsu.union(face_of[d], face_of[d ^ 1])
    adj = None
    for k in range(2, K + 1):
        if ear_ok[k]:
            continue
        if adj is None:
            adj = g.rotations()
        if not _prefix_biconnected(adj, gi, k):
            rep.add("prefix-2conn", k, "prefix graph is not 2-connected")
    for k in sorted(outer_bad):
        rep.add("outer-face", k, outer_bad[k])


def _prefix_biconnected(adj, gi, k) -> bool:
    verts = [v for v in range(len(adj)) if gi[v] <= k]
    pos = {v: i for i, v in enumerate(verts)}
    sub = [[pos[u] for u in adj[v] if u in pos] for v in verts]
    return _biconnected(len(verts), sub)


def _prefix_checks_brute(g, co, gi, rep) -> None:
    K = co.K
    head, cw_next = g.head, g.cw_next
    v1, v2, _ = g.roots
    for k in range(2, K + 1):
        inside = [gi[v] <= k for v in range(g.n)]
        verts = [v for v in range(g.n) if inside[v]]
        ok = len(verts) >= 3
        for x in verts:
            if not ok:
                break
            rest = [v for v in verts if v != x]
            seen = {rest[0]}
            stack = [rest[0]]
            while stack:
                v = stack.pop()
                for d in g.darts_around(v):
                    u = head[d]
                    if inside[u] and u != x and u not in seen:
                        seen.add(u)
                        stack.append(u)
            ok = len(seen) == len(rest)
        if not ok:
            rep.add("prefix-2conn", k, "prefix graph is not 2-connected")
        if not ok or not (inside[v1] and inside[v2]):
            # the trace below needs every prefix vertex to have a prefix neighbour
            continue

        def rnext(d: int) -> int:
            x = cw_next[d]
            while not inside[head[x]]:
                x = cw_next[x]
            return x

        d0 = g.dart(v2, v1)
        outer_darts = set()
        d = d0
        while d not in outer_darts:
            outer_darts.add(d)
            d = rnext(d ^ 1)
        on_outer = {head[d] for d in outer_darts}
        grp = co.groups[k - 1]
        missing = [z for z in grp if z not in on_outer]
        if missing:
            rep.add("outer-face", k, f"vertex {missing[0]} is not on the outer face of the prefix")
        elif len(grp) > 1:
            for a, b in zip(grp, grp[1:]):
                if not g.has_edge(a, b) or g.dart(a, b) not in outer_darts:
                    rep.add("chain-clockwise", k, f"chain {grp} is not clockwise on the prefix outer face")
                    break
