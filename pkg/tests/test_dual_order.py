import pytest
from oracles import is_canonical

from cotree.canonical import CanonicalOrdering, annotate, compute_canonical_ordering, validate_canonical_ordering
from cotree.dual_order import completed_faces, dual_canonical_ordering, edge_kind, verify_label_correspondence
from cotree.generators import cube, dodecahedron, polyhedron, tetrahedron, triangulation, wheel
from cotree.planar import rooted_at_face


def test_k4_dual_ordering():
    g = tetrahedron()
    dco = dual_canonical_ordering(g)
    assert dco.ordering.K == 3 and dco.graph.n == 4
    assert dco.ordering.groups == ((0, 1), (3,), (2,))
    assert validate_canonical_ordering(dco.graph, dco.ordering).ok
    assert is_canonical(dco.graph.rotations(), dco.graph.roots, dco.ordering.groups)


def test_cube_dual_ordering():
    g = cube()
    co = compute_canonical_ordering(g)
    dco = dual_canonical_ordering(g, co)
    assert sorted(dco.graph.degrees()) == [4] * 6
    assert validate_canonical_ordering(dco.graph, dco.ordering, brute=True).ok
    # one dual group for F_1 plus one per primal group V_2..V_K
    assert dco.ordering.K == co.K


def test_dual_roots_and_last_group():
    g = triangulation(90, 3)
    dco = dual_canonical_ordering(g)
    f1, f2, fphi = dco.graph.roots
    assert f1 == g.outer_face
    assert f2 == g.face_of[g.dart(g.vn, g.v1)]
    assert fphi == g.face_of[g.dart(g.v1, g.v2)]
    assert dco.ordering.groups[0] == (f1, f2)
    assert dco.ordering.groups[-1] == (fphi,)


def test_completed_faces_partition_inner_faces():
    g = polyhedron(40, 2)
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    comp = completed_faces(g, co, an)
    faces = [f for grp in comp for f in grp]
    f2 = g.face_of[g.dart(g.vn, g.v1)]
    assert sorted(faces + [g.outer_face, f2]) == list(range(g.num_faces))


@pytest.mark.parametrize("g", [wheel(8), dodecahedron(), polyhedron(30, 4), triangulation(200, 11)])
def test_engines_agree(g):
    a = dual_canonical_ordering(g)
    b = dual_canonical_ordering(g, engine="python")
    assert a.ordering == b.ordering
    assert a.annotation.labels == b.annotation.labels


@pytest.mark.parametrize("n, seed", [(10, 0), (40, 1), (120, 2), (200, 3)])
def test_label_correspondence(n, seed):
    g = triangulation(n, seed)
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    dco = dual_canonical_ordering(g, co, an)
    assert verify_label_correspondence(g, an, dco).ok
    for e in range(g.m):
        if an.is_intra(g, e):
            assert edge_kind(dco.graph, dco.annotation, e) == "S"


def test_every_rooting_of_the_dodecahedron():
    g = dodecahedron()
    for d in range(0, 2 * g.m, 3):
        h = rooted_at_face(g, g.tail(d), g.head[d])
        co = compute_canonical_ordering(h)
        an = annotate(h, co)
        dco = dual_canonical_ordering(h, co, an)
        assert validate_canonical_ordering(dco.graph, dco.ordering).ok
        assert verify_label_correspondence(h, an, dco).ok


def test_swapped_dual_groups_are_caught():
    g = polyhedron(30, 5)
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    dco = dual_canonical_ordering(g, co, an)
    groups = list(dco.ordering.groups)
    k = next(k for k in range(1, len(groups) - 2) if groups[k] != groups[k + 1])
    groups[k], groups[k + 1] = groups[k + 1], groups[k]
    bad = CanonicalOrdering.from_groups(groups)
    assert not validate_canonical_ordering(dco.graph, bad).ok
    bad_dco = type(dco)(dco.dual, bad, annotate(dco.graph, bad))
    assert not verify_label_correspondence(g, an, bad_dco).ok
