import json

import pytest

from cotree.errors import BadRoots, EulerViolation, NonSymmetricAdjacency, OuterFaceNotFound, ParallelOrLoopEdge, VertexOutOfRange
from cotree.errors import TooLargeForBruteCheck
from cotree.generators import cube, dodecahedron, octahedron, tetrahedron, triangulation, wheel
from cotree.planar import build_graph, dual, from_faces, graph_from_dict, is_three_connected, rooted_at_face, to_dot

K4_ROT = [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]]


def test_k4_has_four_faces():
    g = build_graph(K4_ROT)
    assert (g.n, g.m, g.num_faces) == (4, 6, 4)


def test_cube_has_six_faces():
    g = cube()
    assert (g.n, g.m, g.num_faces) == (8, 12, 6)
    assert sorted(g.face_sizes()) == [4] * 6


def test_reversed_rotation_breaks_euler():
    rot = [list(r) for r in K4_ROT]
    rot[2].reverse()
    with pytest.raises(EulerViolation):
        build_graph(rot)


@pytest.mark.parametrize(
    "rot, exc",
    [
        ([[1, 2], [0], [0, 1]], NonSymmetricAdjacency),
        ([[1, 5], [0], [0]], VertexOutOfRange),
        ([[1, 1], [0, 0]], ParallelOrLoopEdge),
        ([[0, 1], [0]], ParallelOrLoopEdge),
    ],
)
def test_bad_rotation_systems(rot, exc):
    with pytest.raises(exc):
        build_graph(rot)


def test_dart_structure():
    g = triangulation(40, 2)
    for d in range(2 * g.m):
        assert g.head[d ^ 1] == g.tail(d)
        assert g.cw_prev[g.cw_next[d]] == d
        assert g.tail(g.cw_next[d]) == g.tail(d)
    assert g.n - g.m + g.num_faces == 2


def test_root_rule():
    g = build_graph(K4_ROT)
    v1, v2, vn = g.roots
    assert v1 == 0 and vn == K4_ROT[0][0] and v2 == K4_ROT[0][-1]
    assert g.face_of[g.dart(v1, vn)] == g.outer_face == g.face_of[g.dart(v2, v1)]
    assert g.outer_cycle()[:2] == [v1, vn] and g.outer_cycle()[-1] == v2


def test_bad_roots():
    with pytest.raises(BadRoots):
        build_graph(K4_ROT, roots=(0, 1, 2))
    with pytest.raises(BadRoots):
        build_graph(K4_ROT, roots=(0, 0, 1))


def test_outer_witness_either_direction():
    g = cube()
    cyc = g.outer_cycle()
    for w in (cyc, cyc[::-1], cyc[2:] + cyc[:2]):
        assert build_graph(g.rotations(), outer=w).outer_face == g.outer_face
    with pytest.raises(OuterFaceNotFound):
        build_graph(g.rotations(), outer=[0, 1, 2, 3, 4])


def test_json_round_trip():
    for g in (cube(), dodecahedron(), triangulation(60, 5), wheel(7)):
        h = graph_from_dict(json.loads(g.to_json()))
        assert h.to_json() == g.to_json()
        assert h.cw_next == g.cw_next and h.roots == g.roots


def test_from_faces_matches_rotations():
    g = octahedron()
    faces = [g.face_vertices(f) for f in range(g.num_faces)]
    h = from_faces(g.n, faces)
    assert sorted(map(sorted, h.edges())) == sorted(map(sorted, g.edges()))


def test_rooted_at_face():
    g = cube()
    for d in range(2 * g.m):
        h = rooted_at_face(g, g.tail(d), g.head[d])
        assert h.v1 == g.tail(d) and h.vn == g.head[d]
        assert h.face_of[h.dart(h.v1, h.vn)] == h.outer_face


def test_dual_of_tetrahedron():
    D = dual(tetrahedron())
    assert (D.graph.n, D.graph.m) == (4, 6)
    assert D.graph.degrees() == [3, 3, 3, 3]


def test_dual_of_cube_is_octahedron():
    g = cube()
    D = dual(g)
    assert D.graph.degrees() == [4] * 6
    # face-adjacency oracle: faces sharing an edge
    adj = {f: set() for f in range(g.num_faces)}
    for e in range(g.m):
        a, b = g.face_of[2 * e], g.face_of[2 * e + 1]
        adj[a].add(b)
        adj[b].add(a)
    assert {f: set(D.graph.neighbours(f)) for f in range(g.num_faces)} == adj


def test_dual_handshake_and_roots():
    g = triangulation(80, 4)
    D = dual(g)
    assert sum(D.graph.degrees()) == 2 * g.m
    f1, f2, fphi = D.graph.roots
    assert f1 == g.outer_face
    assert f2 == g.face_of[g.dart(g.vn, g.v1)]
    assert fphi == g.face_of[g.dart(g.v1, g.v2)]
    for d in range(2 * g.m):
        assert D.left_face(d) == g.face_of[d]
        assert D.graph.head[d] == g.face_of[d ^ 1]


def test_double_dual_restores_graph():
    g = triangulation(30, 1)
    gg = dual(dual(g).graph).graph
    assert gg.n == g.n and gg.m == g.m
    assert sorted(gg.degrees()) == sorted(g.degrees())


def test_three_connectivity():
    assert is_three_connected(build_graph(K4_ROT))
    assert is_three_connected(cube())
    # 4-cycle 0-1-2-3 with chord (0, 2)
    chord = build_graph([[1, 2, 3], [2, 0], [3, 0, 1], [0, 2]])
    assert not is_three_connected(chord)
    assert not is_three_connected(chord, method="pairs")
    with pytest.raises(TooLargeForBruteCheck):
        is_three_connected(triangulation(600, 0))


def test_dot_export():
    text = to_dot(tetrahedron())
    assert text.startswith("graph G {") and text.count("--") == 6
