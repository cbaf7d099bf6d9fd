from collections import Counter

import pytest
from oracles import spanning_tree_count_brute

from cotree.canonical import annotate, compute_canonical_ordering
from cotree.errors import TooLarge
from cotree.generators import cube, octahedron, polyhedron, prism, tetrahedron, triangulation, wheel
from cotree.planar import build_graph
from cotree.trees import barnette_tree, five_tree, five_tree_pipeline
from cotree.verify import (
    MUTATIONS,
    best_degree_pair,
    check_annotation,
    check_barnette,
    check_five_tree,
    check_label_grammar,
    check_parent_lemma,
    degree_profile,
    enumerate_spanning_trees,
    matrix_tree_count,
    run_mutations,
    verify_cotree,
    verify_pipeline,
    verify_spanning_tree,
)

C4 = [[1, 3], [2, 0], [3, 1], [0, 2]]


def test_k4_path_and_triangle():
    g = tetrahedron()
    path = [g.dart(0, 2) >> 1, g.dart(2, 3) >> 1, g.dart(3, 1) >> 1]
    assert verify_spanning_tree(g, path).ok
    triangle = [g.dart(0, 1) >> 1, g.dart(1, 2) >> 1, g.dart(2, 0) >> 1]
    rep = verify_spanning_tree(g, triangle)
    assert not rep.ok
    assert len(rep) >= 2  # a cycle, and vertex 3 is left out
    assert degree_profile(g, path)[0] == 2


def test_star_degree():
    g = tetrahedron()
    star = [g.dart(0, v) >> 1 for v in (1, 2, 3)]
    assert degree_profile(g, star)[0] == 3
    assert degree_profile(g, star)[1] == [0, 3, 0, 1]


def test_cotree_check():
    g = triangulation(50, 1)
    pair = five_tree(g)
    assert verify_cotree(g, pair.tree_edges, pair.cotree_edges).ok
    assert not verify_cotree(g, pair.tree_edges, set(pair.cotree_edges) - {min(pair.cotree_edges)}).ok


def test_spanning_tree_counts():
    assert sum(1 for _ in enumerate_spanning_trees(tetrahedron())) == 16
    assert sum(1 for _ in enumerate_spanning_trees(build_graph(C4))) == 4
    g = cube()
    count = sum(1 for _ in enumerate_spanning_trees(g))
    assert count == matrix_tree_count(g) == spanning_tree_count_brute(g.n, g.edges()) == 384


def test_enumeration_is_exact():
    g = prism(4)
    trees = list(enumerate_spanning_trees(g))
    assert len(set(trees)) == len(trees)
    assert all(verify_spanning_tree(g, t).ok for t in trees)


def test_gate():
    with pytest.raises(TooLarge):
        next(enumerate_spanning_trees(triangulation(20, 0), gate=12))


@pytest.mark.parametrize("g", [tetrahedron(), cube(), octahedron(), wheel(7), polyhedron(8, 2)])
def test_best_pair(g):
    best = best_degree_pair(g)
    assert max(best) <= 3
    out = five_tree(g)
    assert best[0] <= out.max_deg_tree <= 5 and best[1] <= 10


@pytest.mark.parametrize("g", [cube(), polyhedron(40, 1), triangulation(150, 6)])
def test_checkers_pass_on_real_output(g):
    co = compute_canonical_ordering(g)
    an = annotate(g, co)
    assert check_annotation(g, co, an).ok
    assert check_label_grammar(g, an).ok
    assert check_parent_lemma(g, an).ok
    assert check_barnette(g, an, barnette_tree(g, an)).ok
    assert check_five_tree(g, five_tree_pipeline(g, co, an)).ok
    rep, res = verify_pipeline(g)
    assert rep.ok, rep.to_text()


def test_catalog_size():
    assert len({m.name for m in MUTATIONS}) >= 8


@pytest.mark.parametrize("seed", range(3))
def test_every_mutation_is_detected(seed):
    outcomes = run_mutations(polyhedron(30, seed), seed=seed, repeats=2)
    outcomes += run_mutations(triangulation(60, seed), seed=seed, repeats=2)
    missed = [o for o in outcomes if not o.detected]
    assert not missed, missed
    assert len(Counter(o.kind for o in outcomes)) >= 8
