import itertools
import math

import pytest

from fiedlerkit import families as fam
from fiedlerkit.embeddings import certify, check_balance
from fiedlerkit.graph import EdgeListError, components_after_removal, cross_edge_count, from_edge_list
from fiedlerkit.separators import (
    FinderContractError,
    MaximalOuterplanarGraph,
    NotATreeError,
    TriangulationError,
    auto_separator,
    bfs_level_finder,
    build_dual_tree,
    fan_triangulation,
    format_triangulation,
    is_tree,
    nonisomorphic_trees,
    outerplanar_separator,
    parse_triangulation,
    random_triangulation,
    read_triangulation,
    refine_balanced,
    tree_canonical_form,
    tree_centroid,
    tree_centroid_finder,
    tree_from_pruefer,
)
from fiedlerkit.spectra import fiedler_value

# number of unlabeled trees on n vertices
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


def is_centroid(T, v):
    return all(2 * len(c) <= T.n for c in components_after_removal(T, (v,)))


class TestCentroid:
    def test_p5(self):
        assert tree_centroid(fam.path(5)) == 2

    def test_star(self):
        assert tree_centroid(fam.star(8)) == 0

    def test_p4_lowest(self):
        assert tree_centroid(fam.path(4)) == 1

    def test_single(self):
        assert tree_centroid(fam.empty(1)) == 0

    def test_not_tree(self):
        with pytest.raises(NotATreeError):
            tree_centroid(fam.cycle(4))

    @pytest.mark.parametrize("n", range(3, 8))
    def test_all_labeled_trees(self, n):
        for seq in itertools.product(range(n), repeat=n - 2):
            T = tree_from_pruefer(seq)
            c = tree_centroid(T)
            assert is_centroid(T, c)
            assert not any(is_centroid(T, v) for v in range(c))

    @pytest.mark.parametrize("n", range(1, 10))
    def test_all_unlabeled_trees(self, n):
        trees = nonisomorphic_trees(n)
        assert len(trees) == TREE_COUNTS[n]
        for T in trees:
            assert is_tree(T) and is_centroid(T, tree_centroid(T))


class TestTreeHelpers:
    def test_pruefer_star(self):
        assert tree_from_pruefer([0, 0, 0]) == fam.star(5)

    def test_pruefer_path(self):
        assert tree_from_pruefer([1, 2, 3]).edges() == fam.path(5).edges()

    def test_canonical_form_invariant(self):
        a = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
        b = from_edge_list(5, [(4, 3), (3, 2), (2, 1), (3, 0)])
        assert tree_canonical_form(a) == tree_canonical_form(b)
        assert tree_canonical_form(a) != tree_canonical_form(fam.path(5))


class TestTriangulation:
    def test_square(self):
        P = MaximalOuterplanarGraph(4, ((0, 2),))
        assert P.faces == ((0, 1, 2), (0, 2, 3))
        assert P.graph.m == 5

    def test_triangle(self):
        P = MaximalOuterplanarGraph(3, ())
        assert P.faces == ((0, 1, 2),)

    @pytest.mark.parametrize(
        "n, diags",
        [(2, ()), (5, ((0, 2),)), (5, ((0, 2), (1, 3))), (5, ((0, 1), (0, 2))), (5, ((0, 2), (2, 0))), (5, ((0, 2), (0, 9)))],
    )
    def test_invalid(self, n, diags):
        with pytest.raises(TriangulationError):
            MaximalOuterplanarGraph(n, diags)

    def test_text_roundtrip(self, tmp_path):
        P = random_triangulation(12, 3)
        (tmp_path / "t.txt").write_text(format_triangulation(P))
        assert read_triangulation(tmp_path / "t.txt") == P

    @pytest.mark.parametrize("text, line", [("", 1), ("x\n", 1), ("5\n0 2\n1\n", 3), ("5\n0 2\n1 3\n", 3), ("5\n0 q\n", 2)])
    def test_parse_errors(self, text, line):
        with pytest.raises(EdgeListError) as err:
            parse_triangulation(text)
        assert err.value.line == line

    def test_fan_matches_family(self):
        for k in range(2, 12):
            assert fan_triangulation(k).graph == fam.fan(k)

    def test_random_is_seeded(self):
        assert random_triangulation(20, 7) == random_triangulation(20, 7)


class TestDualTree:
    def test_square(self):
        D = build_dual_tree(MaximalOuterplanarGraph(4, ((0, 2),)))
        assert D.tree.edges() == [(0, 1)]
        assert D.shared == {(0, 1): (0, 2)}

    def test_hexagon_fan_is_path(self):
        D = build_dual_tree(fan_triangulation(5))
        assert D.tree.n == 4 and sorted(D.tree.degrees()) == [1, 1, 2, 2]

    def test_pentagon(self):
        D = build_dual_tree(MaximalOuterplanarGraph(5, ((0, 2), (2, 4))))
        assert D.tree.n == 3 and sorted(D.tree.degrees()) == [1, 1, 2]

    def test_inner_triangle_gives_claw(self):
        D = build_dual_tree(MaximalOuterplanarGraph(6, ((0, 2), (2, 4), (0, 4))))
        assert D.tree.max_degree == 3

    @pytest.mark.parametrize("seed", range(200))
    def test_random(self, seed):
        n = 4 + seed % 37
        D = build_dual_tree(random_triangulation(n, seed))
        assert D.tree.n == n - 2
        assert D.tree.max_degree <= 3 and D.tree.is_connected()


def check_outerplanar(P):
    sep = outerplanar_separator(P)
    G = P.graph
    assert len(sep.separator) in (2, 3)
    check_balance(G, sep.separator)
    cross = cross_edge_count(G, sep.separator)
    assert cross <= G.n
    cert = certify(G, sep.separator)
    assert cert.bound <= G.n / (G.n - 3) + 1e-12
    return sep, cert


class TestOuterplanarSeparator:
    def test_square_case1(self):
        sep, cert = check_outerplanar(MaximalOuterplanarGraph(4, ((0, 2),)))
        assert sep.case == 1 and sep.separator == (0, 2)
        assert cert.bound_text == "4/2"

    def test_inner_triangle_case2(self):
        sep, _ = check_outerplanar(MaximalOuterplanarGraph(6, ((0, 2), (2, 4), (0, 4))))
        assert sep.case == 2 and sep.separator == (0, 2, 4)

    @pytest.mark.parametrize("k", range(3, 30))
    def test_fans(self, k):
        P = fan_triangulation(k)
        _, cert = check_outerplanar(P)
        assert fiedler_value(P.graph) <= cert.bound + 1e-8

    @pytest.mark.parametrize("seed", range(200))
    def test_random(self, seed):
        n = 4 + seed % 37
        P = random_triangulation(n, seed)
        _, cert = check_outerplanar(P)
        assert fiedler_value(P.graph) <= cert.quotient + 1e-8

    def test_too_small(self):
        with pytest.raises(TriangulationError):
            outerplanar_separator(MaximalOuterplanarGraph(3, ()))


class TestRefine:
    def test_balanced_is_fixed_point(self):
        G = fam.path(5)
        assert refine_balanced(G, [2], tree_centroid_finder) == (2,)

    def test_path9(self):
        X = refine_balanced(fam.path(9), [], tree_centroid_finder)
        check_balance(fam.path(9), X)
        assert X == (4,)

    def test_star(self):
        assert refine_balanced(fam.star(9), [], tree_centroid_finder) == (0,)

    def test_unbalanced_start(self):
        X = refine_balanced(fam.path(11), [1], tree_centroid_finder)
        assert 1 in X
        check_balance(fam.path(11), X)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_iteration_bound_on_trees(self, n):
        cap = math.ceil(math.log(n, 1.5))
        for T in nonisomorphic_trees(n):
            steps = []
            X = refine_balanced(T, [], tree_centroid_finder, on_iteration=steps.append)
            check_balance(T, X)
            assert len(steps) <= cap

    def test_triangulation_fixed_point(self):
        P = random_triangulation(25, 1)
        X = outerplanar_separator(P).separator
        steps = []
        assert refine_balanced(P.graph, X, bfs_level_finder, on_iteration=steps.append) == X
        assert steps == []

    def test_bad_finder(self):
        with pytest.raises(FinderContractError):
            refine_balanced(fam.path(9), [], lambda H: (0,))

    def test_empty_finder(self):
        with pytest.raises(FinderContractError):
            refine_balanced(fam.path(9), [], lambda H: ())


class TestAutoSeparator:
    @pytest.mark.parametrize("name", ["doublewheel:20", "quadrangulation:16", "fan:15", "wheel:12", "grid:5:5", "cube", "kh:5:12"])
    def test_families(self, name):
        G = fam.FamilySpec.parse(name).build()
        X = auto_separator(G)
        cert = certify(G, X, lambda2=fiedler_value(G))
        assert not cert.soundness_errors()

    def test_tree(self):
        assert auto_separator(fam.path(7)) == (3,)

    def test_high_degree_override(self):
        G = fam.doublewheel(12)
        X = auto_separator(G, high_degree=12)
        assert {12, 13} <= set(X)

    def test_bfs_finder_contract(self):
        for seed in range(30):
            G = random_triangulation(10 + seed, seed).graph
            Y = bfs_level_finder(G)
            assert all(3 * len(c) <= 2 * G.n for c in components_after_removal(G, Y))
