import pytest
from oracles import all_canonical_orderings, is_canonical

from cotree.canonical import (
    CHAIN,
    CHAIN_RULES,
    LABELS,
    SINGLETON,
    CanonicalOrdering,
    annotate,
    check_face_orientation,
    compute_canonical_ordering,
    enumerate_vertices,
    mirror,
    validate_canonical_ordering,
)
from cotree.canonical import E, N, NE, NW, S, SE, SW, W
from cotree.errors import NotThreeConnected
from cotree.generators import cube, dodecahedron, polyhedron, prism, tetrahedron, triangulation, wheel
from cotree.planar import build_graph, rooted_at_face
from cotree.trees import make_pair
from cotree.verify import derive_labels

# K4 as generated: a=0, b=2, c=3, d=1 with roots (a, b, d)
A, B, C, D = 0, 2, 3, 1


def test_k4_groups():
    g = tetrahedron()
    assert g.roots == (A, B, D)
    co = compute_canonical_ordering(g)
    # the exhaustive oracle accepts exactly one partition
    assert all_canonical_orderings(g.rotations(), g.roots) == [[[A, B], [C], [D]]]
    assert co.groups == ((A, B), (C,), (D,))
    assert co.kinds == ("chain", SINGLETON, SINGLETON) or co.kinds[1:] == (SINGLETON, SINGLETON)
    assert validate_canonical_ordering(g, co).ok


def test_wheel_with_hub_last():
    g = rooted_at_face(wheel(5), 0, 4)
    co = compute_canonical_ordering(g)
    # frozen from the exhaustive oracle
    assert all_canonical_orderings(g.rotations(), g.roots) == [[[0, 1], [3, 2], [4]]]
    assert co.groups == ((0, 1), (3, 2), (4,))
    assert co.kinds[1] == CHAIN


@pytest.mark.parametrize("g", [prism(3), prism(5), cube(), dodecahedron(), triangulation(9, 3)])
def test_ordering_is_one_the_oracle_accepts(g):
    co = compute_canonical_ordering(g)
    assert is_canonical(g.rotations(), g.roots, co.groups)


def test_triangulated_prism():
    g = prism(4)
    rot = g.rotations()
    # add one diagonal per quadrilateral side so every face is a triangle
    faces = [g.face_vertices(f) for f in range(g.num_faces) if g.face_sizes()[f] == 4]
    for f in faces:
        a, c = f[0], f[2]
        if c in rot[a]:
            a, c = f[1], f[3]
        rot[a].insert(rot[a].index(f[1] if a == f[0] else f[2]), c)
        rot[c].insert(rot[c].index(f[3] if a == f[0] else f[0]), a)
    h = build_graph(rot)
    assert h.m == 3 * h.n - 6 - (h.face_sizes().count(4))
    assert validate_canonical_ordering(h, compute_canonical_ordering(h)).ok


def test_validator_rejects_misplaced_vn():
    g = tetrahedron()
    bad = CanonicalOrdering.from_groups([[A, B], [D], [C]])
    for brute in (True, False):
        rep = validate_canonical_ordering(g, bad, brute=brute)
        assert not rep.ok and "VK" in rep.checks()


def test_validator_modes_agree_on_swaps():
    g = triangulation(25, 4)
    co = compute_canonical_ordering(g)
    for k in range(1, co.K - 2):
        if co.kinds[k] == co.kinds[k + 1] == SINGLETON:
            groups = list(co.groups)
            groups[k], groups[k + 1] = groups[k + 1], groups[k]
            swapped = CanonicalOrdering.from_groups(groups)
            fast = validate_canonical_ordering(g, swapped, brute=False)
            slow = validate_canonical_ordering(g, swapped, brute=True)
            oracle = is_canonical(g.rotations(), g.roots, groups)
            assert fast.ok == slow.ok == oracle


def test_not_three_connected_input():
    # a 4-cycle with one chord
    g = build_graph([[1, 2, 3], [2, 0], [3, 0, 1], [0, 2]])
    with pytest.raises(NotThreeConnected):
        compute_canonical_ordering(g)


def test_engines_agree():
    for g in (cube(), dodecahedron(), polyhedron(30, 1), triangulation(300, 8)):
        assert compute_canonical_ordering(g, engine="python") == compute_canonical_ordering(g)
        co = compute_canonical_ordering(g)
        for rule in CHAIN_RULES:
            fast = annotate(g, co, chain_rule=rule)
            slow = annotate(g, co, chain_rule=rule, engine="python")
            assert (fast.idx, fast.out, fast.parent, fast.labels) == (slow.idx, slow.out, slow.parent, slow.labels)


def test_k4_enumeration_and_parents():
    g = tetrahedron()
    an = annotate(g, compute_canonical_ordering(g))
    assert [an.idx[v] for v in (A, B, C, D)] == [1, 2, 3, 4]
    parent_tail = {v: g.tail(an.parent[v]) for v in range(g.n) if an.parent[v] >= 0}
    assert parent_tail == {D: C, C: B, B: A}


def test_singleton_index_is_offset_plus_one():
    g = triangulation(120, 2)
    co = compute_canonical_ordering(g)
    idx = enumerate_vertices(g, co)
    s = 0
    for grp in co.groups:
        if len(grp) == 1:
            assert idx[grp[0]] == s + 1
        s += len(grp)


def _chain_directions(g, co, idx):
    """(left attachment idx, right attachment idx, numbered right-to-left) per chain."""
    gi = co.group_index(g.n)
    out = []
    for k, grp in enumerate(co.groups[1:-1], start=2):
        if len(grp) < 2:
            continue
        left = next(u for u in g.neighbours(grp[0]) if gi[u] < k)
        right = next(u for u in g.neighbours(grp[-1]) if gi[u] < k)
        out.append((idx[left], idx[right], idx[grp[0]] > idx[grp[-1]]))
    return out


def test_chain_numbering_rules():
    g = cube()
    co = compute_canonical_ordering(g)
    literal = _chain_directions(g, co, enumerate_vertices(g, co, chain_rule="smaller-first"))
    default = _chain_directions(g, co, enumerate_vertices(g, co))
    # under the default numbering cube chain (5, 6) hangs off the higher-indexed left attachment
    assert co.groups[2] == (5, 6)
    assert literal[1] == (3, 4, False) and default[1] == (4, 3, False)
    # literal rule: higher left attachment means right-to-left numbering
    assert all(rtl == (lft > rgt) for lft, rgt, rtl in literal)
    # default rule: the end with the larger-indexed attachment goes first
    assert all(rtl == (lft < rgt) for lft, rgt, rtl in default)


def test_chain_rules_over_corpus():
    seen = set()
    for seed in range(20):
        g = polyhedron(40, seed)
        co = compute_canonical_ordering(g)
        for rule, want in (("smaller-first", lambda l, r: l > r), ("larger-first", lambda l, r: l < r)):
            for lft, rgt, rtl in _chain_directions(g, co, enumerate_vertices(g, co, chain_rule=rule)):
                assert rtl == want(lft, rgt)
                seen.add((rule, lft > rgt))
    assert len(seen) == 4


def test_literal_chain_rule_breaks_degree_three():
    # found by sweeping all rootings of small seeded polyhedra
    g = polyhedron(12, 0)
    d = 32
    h = rooted_at_face(g, g.tail(d), g.head[d])
    co = compute_canonical_ordering(h)
    literal = make_pair(h, annotate(h, co, chain_rule="smaller-first").parent_edges())
    default = make_pair(h, annotate(h, co).parent_edges())
    assert literal.max_deg_tree == 4
    assert default.max_deg_tree <= 3


def test_root_labels():
    g = triangulation(50, 6)
    an = annotate(g, compute_canonical_ordering(g))
    v1, v2, vn = g.roots
    assert an.labels[g.dart(v1, v2)] == E
    assert an.labels[g.dart(v1, vn)] == S
    assert an.oriented_dart(g.dart(v1, vn) >> 1) == g.dart(vn, v1)


def test_k4_label_table():
    g = tetrahedron()
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    table = {(g.tail(d), g.head[d]): (LABELS[an.labels[d]], LABELS[an.labels[d ^ 1]])
             for d in (an.oriented_dart(e) for e in range(g.m))}
    assert table == {
        (D, A): ("N", "S"),
        (A, C): ("NE", "SW"),
        (A, B): ("E", "W"),
        (B, D): ("NW", "SE"),
        (C, D): ("NE", "SW"),
        (B, C): ("NW", "SE"),
    }
    assert list(an.labels) == derive_labels(g, co, an)


def test_label_helpers():
    assert [mirror(x) for x in (S, SW, W, NW, N, NE, E, SE)] == [N, NE, E, SE, S, SW, W, NW]


@pytest.mark.parametrize("g", [tetrahedron(), cube(), triangulation(70, 1), polyhedron(25, 3)])
def test_orientation(g):
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    v1, _, vn = g.roots
    for v in range(g.n):
        ds = list(g.darts_around(v))
        outs = [an.out[d] for d in ds]
        # one run of incoming and one run of outgoing edges, cyclically
        changes = sum(outs[i] != outs[i - 1] for i in range(len(outs)))
        if v not in (v1, vn):
            assert changes == 2
    assert an.parent[v1] < 0
    assert all(an.parent[v] >> 1 != g.dart(v1, vn) >> 1 for v in range(g.n) if an.parent[v] >= 0)
    for v in range(g.n):
        if an.parent[v] >= 0:
            tails = [an.idx[g.tail(d ^ 1)] for d in g.darts_around(v) if not an.out[d]]
            assert an.idx[g.tail(an.parent[v])] == max(tails)
    assert check_face_orientation(g, an).ok


def test_k4_faces_at_root_edge_are_directed():
    g = tetrahedron()
    an = annotate(g, compute_canonical_ordering(g))
    dn = g.dart(g.vn, g.v1)
    for f in (g.face_of[dn], g.face_of[dn ^ 1]):
        darts = g.face_darts(f)
        assert len({an.out[d] for d in darts}) == 1


def test_flipped_edge_breaks_face_orientation():
    g = triangulation(30, 2)
    an = annotate(g, compute_canonical_ordering(g))
    e = next(e for e in range(g.m) if g.dart(g.vn, g.v1) >> 1 != e)
    out = list(an.out)
    out[2 * e], out[2 * e + 1] = out[2 * e + 1], out[2 * e]
    flipped = type(an)(an.idx, an.group, tuple(out), an.parent, an.first_out, an.last_out, an.labels)
    assert not check_face_orientation(g, flipped).ok


def test_ordering_json():
    g = cube()
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    data = co.to_dict(an.idx)
    assert CanonicalOrdering.from_groups(data["groups"]) == co
    assert data["idx"] == list(an.idx)
