"""Seeded generators of 3-connected plane graphs.

All random kinds draw from numpy's PCG64 bit generator seeded with the user
seed, so a ``(kind, n, seed)`` triple reproduces the same graph everywhere.
Roots follow one rule: ``v1 = 0``, ``vn`` is the first entry of vertex 0's
rotation and ``v2`` the last, which makes the face left of ``0 -> vn`` outer.
"""

from __future__ import annotations

import numpy as np

from .errors import BadParams
from .planar import PlanarGraph, build_graph, dual, is_three_connected, orient_faces, rotations_from_faces

KINDS = (
    "tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
    "wheel", "prism", "triangulation", "cubic", "polyhedron",
)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(int(seed) & (2**64 - 1))))


def tetrahedron() -> PlanarGraph:
    return _from_unoriented(4, [(0, 1, 2), (0, 1, 3), (1, 2, 3), (0, 2, 3)])


def cube() -> PlanarGraph:
    return prism(4)


def prism(k: int) -> PlanarGraph:
    """``k``-gonal prism: two ``k``-cycles joined by a perfect matching."""
    if k < 3:
        raise BadParams("prism needs k >= 3")
    top = list(range(k))
    bottom = [k + i for i in range(k)]
    faces = [top, bottom]
    for i in range(k):
        j = (i + 1) % k
        faces.append([i, j, k + j, k + i])
    return _from_unoriented(2 * k, faces)


def wheel(n: int) -> PlanarGraph:
    """Wheel on ``n`` vertices in total: rim ``0..n-2`` and hub ``n-1``."""
    if n < 4:
        raise BadParams("wheel needs n >= 4")
    hub = n - 1
    rim = list(range(n - 1))
    faces = [rim] + [[i, (i + 1) % (n - 1), hub] for i in rim]
    return _from_unoriented(n, faces)


def octahedron() -> PlanarGraph:
    return relabelled_dual(cube())


def icosahedron() -> PlanarGraph:
    faces = []
    up = [1 + i for i in range(5)]
    lo = [6 + i for i in range(5)]
    for i in range(5):
        j = (i + 1) % 5
        faces += [(0, up[i], up[j]), (up[i], up[j], lo[i]), (up[j], lo[j], lo[i]), (11, lo[i], lo[j])]
    return _from_unoriented(12, faces)


def dodecahedron() -> PlanarGraph:
    return relabelled_dual(icosahedron())


def relabelled_dual(g: PlanarGraph) -> PlanarGraph:
    """The dual of ``g`` as a stand-alone graph with the default root rule."""
    return build_graph(dual(g).graph.rotations())


def triangulation(n: int, seed: int) -> PlanarGraph:
    """Random maximal plane graph built by inserting each new vertex into a
    uniformly chosen face of the current triangulation.

    This is not a uniform sampler of triangulations.
    """
    return build_graph(rotations_from_faces(n, _triangulation_faces(n, seed)))


def _triangulation_faces(n: int, seed: int) -> list[tuple[int, int, int]]:
    if n < 4:
        raise BadParams("triangulation needs n >= 4")
    rng = rng_for(seed)
    draws = rng.random(n)
    faces: list[tuple[int, int, int]] = [(0, 1, 2), (0, 2, 1)]
    for x in range(3, n):
        j = int(draws[x] * len(faces))
        a, b, c = faces[j]
        faces[j] = (a, b, x)
        faces.append((b, c, x))
        faces.append((c, a, x))
    return faces


def cubic(n: int, seed: int) -> PlanarGraph:
    """3-connected cubic plane graph on ``n`` vertices: the dual of a seeded
    triangulation on ``n // 2 + 2`` vertices."""
    if n < 4 or n % 2:
        raise BadParams("cubic needs an even n >= 4")
    return relabelled_dual(triangulation(n // 2 + 2, seed))


POLYHEDRON_MAX_N = 2000


def polyhedron(n: int, seed: int, deletions: int | None = None) -> PlanarGraph:
    """Random 3-connected plane graph: a seeded triangulation with random
    edges removed while 3-connectivity survives.

    Deleting an edge merges its two faces.  The result stays 3-connected iff
    the merged face meets every other face in nothing, one vertex, or one
    shared edge, so each deletion is checked locally.
    """
    if n < 4:
        raise BadParams("polyhedron needs n >= 4")
    if n > POLYHEDRON_MAX_N:
        raise BadParams(f"polyhedron rebuilds the graph per deletion; use n <= {POLYHEDRON_MAX_N}")
    rng = rng_for(seed ^ 0x9E3779B97F4A7C15)
    g = triangulation(n, seed)
    target = (n - 2) if deletions is None else deletions
    order = rng.permutation(g.m)
    edges = g.edges()
    removed = 0
    for e in order:
        if removed >= target:
            break
        u, v = edges[e]
        if g.degree(u) <= 3 or g.degree(v) <= 3 or not g.has_edge(u, v):
            continue
        if not _deletion_keeps_three_connected(g, g.dart(u, v)):
            continue
        rot = g.rotations()
        rot[u].remove(v)
        rot[v].remove(u)
        g = build_graph(rot)
        removed += 1
    return g


def _deletion_keeps_three_connected(g: PlanarGraph, a: int) -> bool:
    f1, f2 = g.face_of[a], g.face_of[a ^ 1]
    if f1 == f2:
        return False
    merged = {f1, f2}
    shared: dict[int, list[int]] = {}
    for f in merged:
        for d in g.face_darts(f):
            x = g.tail(d)
            for dd in g.darts_around(x):
                h = g.face_of[dd]
                if h not in merged and (not shared.get(h) or shared[h][-1] != x):
                    shared.setdefault(h, []).append(x)
    for h, xs in shared.items():
        xs = set(xs)
        if len(xs) > 2:
            return False
        if len(xs) == 2:
            x, y = xs
            if not g.has_edge(x, y):
                return False
            d = g.dart(x, y)
            if d >> 1 == a >> 1 or {g.face_of[d], g.face_of[d ^ 1]} - {h} - merged:
                return False
    return True


def generate(kind: str, n: int | None = None, seed: int = 0) -> PlanarGraph:
    if kind == "tetrahedron":
        return tetrahedron()
    if kind == "cube":
        return cube()
    if kind == "octahedron":
        return octahedron()
    if kind == "dodecahedron":
        return dodecahedron()
    if kind == "icosahedron":
        return icosahedron()
    if n is None:
        raise BadParams(f"kind {kind!r} needs --n")
    if kind == "wheel":
        return wheel(n)
    if kind == "prism":
        if n % 2 or n < 6:
            raise BadParams("prism needs an even n >= 6")
        return prism(n // 2)
    if kind == "triangulation":
        return triangulation(n, seed)
    if kind == "cubic":
        return cubic(n, seed)
    if kind == "polyhedron":
        return polyhedron(n, seed)
    raise BadParams(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def _from_unoriented(n: int, faces) -> PlanarGraph:
    return build_graph(rotations_from_faces(n, orient_faces(faces)))
