"""Property tests over seeded graphs and random rootings."""

import json

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from oracles import is_canonical

from cotree.canonical import CanonicalOrdering, annotate, check_face_orientation, compute_canonical_ordering
from cotree.canonical import validate_canonical_ordering
from cotree.dual_order import dual_canonical_ordering, verify_label_correspondence
from cotree.errors import GraphBuildError, NotThreeConnected
from cotree.generators import generate, triangulation
from cotree.planar import build_graph, graph_from_dict, rooted_at_face
from cotree.trees import barnette_tree, five_tree_pipeline, tree_to_walk
from cotree.verify import (
    check_label_grammar,
    check_parent_lemma,
    derive_labels,
    enumerate_spanning_trees,
    matrix_tree_count,
    run_mutations,
    verify_spanning_tree,
)

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def rooted_graphs(draw, max_n=60):
    kind = draw(st.sampled_from(["triangulation", "polyhedron", "cubic", "wheel", "prism", "named"]))
    seed = draw(st.integers(0, 2**32 - 1))
    if kind == "named":
        g = generate(draw(st.sampled_from(["tetrahedron", "cube", "octahedron", "icosahedron", "dodecahedron"])))
    elif kind in ("cubic", "prism"):
        g = generate(kind, 2 * draw(st.integers(3, max_n // 2)), seed)
    else:
        g = generate(kind, draw(st.integers(4, max_n)), seed)
    d = draw(st.integers(0, 2 * g.m - 1))
    return rooted_at_face(g, g.tail(d), g.head[d])


@SETTINGS
@given(rooted_graphs())
def test_embedding_invariants(g):
    assert g.n - g.m + g.num_faces == 2
    for d in range(2 * g.m):
        assert g.cw_next[g.cw_prev[d]] == d
        assert g.face_of[g.cw_next[d ^ 1]] == g.face_of[d]
    h = graph_from_dict(json.loads(g.to_json()))
    assert h.cw_next == g.cw_next and h.roots == g.roots


@SETTINGS
@given(rooted_graphs())
def test_ordering_is_valid(g):
    co = compute_canonical_ordering(g)
    assert co.groups[0] == (g.v1, g.v2) and co.groups[-1] == (g.vn,)
    assert validate_canonical_ordering(g, co, brute=False).ok
    assert co == compute_canonical_ordering(g, engine="python")


@settings(max_examples=40, deadline=None)
@given(rooted_graphs(max_n=14))
def test_ordering_matches_definition_oracle(g):
    co = compute_canonical_ordering(g)
    assert is_canonical(g.rotations(), g.roots, co.groups)
    assert validate_canonical_ordering(g, co, brute=True).ok


@SETTINGS
@given(rooted_graphs(max_n=20), st.data())
def test_validator_agrees_with_oracle_on_perturbations(g, data):
    co = compute_canonical_ordering(g)
    groups = [list(x) for x in co.groups]
    i = data.draw(st.integers(0, len(groups) - 1))
    j = data.draw(st.integers(0, len(groups) - 1))
    groups[i], groups[j] = groups[j], groups[i]
    if data.draw(st.booleans()):
        k = data.draw(st.integers(0, len(groups) - 1))
        groups[k] = groups[k][::-1]
    cand = CanonicalOrdering.from_groups(groups)
    want = is_canonical(g.rotations(), g.roots, groups)
    assert validate_canonical_ordering(g, cand, brute=True).ok == want
    assert validate_canonical_ordering(g, cand, brute=False).ok == want


@SETTINGS
@given(rooted_graphs())
def test_annotation_properties(g):
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    assert check_face_orientation(g, an).ok
    assert check_label_grammar(g, an).ok
    assert check_parent_lemma(g, an).ok
    assert list(an.labels) == derive_labels(g, co, an)
    assert sorted(an.idx) == list(range(1, g.n + 1))


@SETTINGS
@given(rooted_graphs())
def test_dual_ordering_properties(g):
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    dco = dual_canonical_ordering(g, co, an)
    assert validate_canonical_ordering(dco.graph, dco.ordering).ok
    assert verify_label_correspondence(g, an, dco).ok


@SETTINGS
@given(rooted_graphs(max_n=120))
def test_tree_properties(g):
    assert barnette_tree(g).max_deg_tree <= 3
    res = five_tree_pipeline(g)
    H, Hs = res.H.edges, res.Hstar.edges
    assert max(res.H.degrees(g)) <= 5 and res.H.is_connected(g)
    assert all(e in Hs for e in range(g.m) if e not in H)
    assert res.H0 <= res.pair.tree_edges <= H
    assert verify_spanning_tree(g, res.pair.tree_edges).ok
    assert max(res.pair.degree_profile) <= 5
    walk = tree_to_walk(g, res.pair.tree_edges)
    assert walk.max_vertex_visits <= 5 and walk.max_face_visits <= 5


@settings(max_examples=25, deadline=None)
@given(rooted_graphs(max_n=9))
def test_tree_count_matches_matrix_tree(g):
    if g.n <= 10:
        assert sum(1 for _ in enumerate_spanning_trees(g, gate=10)) == matrix_tree_count(g)


@settings(max_examples=20, deadline=None)
@given(rooted_graphs(max_n=40), st.integers(0, 1000))
def test_mutations_are_caught(g, seed):
    assert all(o.detected for o in run_mutations(g, seed=seed))


@SETTINGS
@given(st.integers(8, 40), st.integers(0, 10_000), st.integers(1, 40))
def test_non_three_connected_input_raises_or_is_valid(n, seed, deletions):
    g = triangulation(n, seed)
    rng = np.random.default_rng(seed)
    rot = g.rotations()
    edges = g.edges()
    for e in rng.permutation(g.m)[:deletions]:
        u, v = edges[e]
        cand = [list(r) for r in rot]
        cand[u].remove(v)
        cand[v].remove(u)
        try:
            build_graph(cand)
        except GraphBuildError:
            continue
        rot = cand
    h = build_graph(rot)
    try:
        co = compute_canonical_ordering(h)
    except NotThreeConnected:
        return
    assert validate_canonical_ordering(h, co).ok


@SETTINGS
@given(rooted_graphs(max_n=14), st.randoms(use_true_random=False))
def test_validator_agrees_with_oracle_on_random_partitions(g, rnd):
    rest = [v for v in range(g.n) if v not in g.roots]
    rnd.shuffle(rest)
    groups = [[g.v1, g.v2]]
    i = 0
    while i < len(rest):
        size = rnd.choice([1, 1, 2, 3])
        groups.append(rest[i:i + size])
        i += size
    groups.append([g.vn])
    cand = CanonicalOrdering.from_groups(groups)
    want = is_canonical(g.rotations(), g.roots, groups)
    assert validate_canonical_ordering(g, cand, brute=True).ok == want
    assert validate_canonical_ordering(g, cand, brute=False).ok == want
