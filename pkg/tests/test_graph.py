import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiedlerkit import families as fam
from fiedlerkit.graph import (
    CompleteGraphError,
    EdgeListError,
    GraphError,
    complement,
    components_after_removal,
    cross_edge_count,
    degree_sequence,
    format_edge_list,
    from_edge_list,
    high_degree_set,
    join,
    laplacian,
    parse_edge_list,
    read_edge_list,
    vertex_connectivity,
    write_edge_list,
)
from fiedlerkit.spectra import eigenvalues_sym


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return from_edge_list(n, edges)


def test_k2():
    G = from_edge_list(2, [(0, 1)])
    assert G.m == 1
    assert G.adjacency == ((1,), (0,))


def test_c4_degrees():
    G = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert G.degrees() == [2, 2, 2, 2]


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        from_edge_list(3, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError, match=r"\(0, 3\)"):
        from_edge_list(3, [(0, 3)])


def test_duplicate_edges_collapse():
    G = from_edge_list(3, [(0, 1), (1, 0), (0, 1)])
    assert G.m == 1


@given(graphs())
def test_handshake_and_symmetry(G):
    assert sum(G.degrees()) == 2 * G.m
    for u in range(G.n):
        assert u not in G.adjacency[u]
        for v in G.adjacency[u]:
            assert u in G.adjacency[v]
        assert list(G.adjacency[u]) == sorted(set(G.adjacency[u]))


class TestLaplacian:
    def test_k2(self):
        np.testing.assert_array_equal(laplacian(from_edge_list(2, [(0, 1)])), [[1, -1], [-1, 1]])

    def test_single_vertex(self):
        np.testing.assert_array_equal(laplacian(from_edge_list(1, [])), [[0]])

    def test_c3(self):
        L = laplacian(fam.cycle(3))
        np.testing.assert_array_equal(np.diag(L), [2, 2, 2])
        assert np.all(L[~np.eye(3, dtype=bool)] == -1)

    @given(graphs())
    def test_definition(self, G):
        L = laplacian(G)
        assert np.array_equal(L, L.T)
        assert np.all(L.sum(axis=1) == 0)
        for i in range(G.n):
            assert L[i, i] == G.degree(i)
            for j in range(G.n):
                if i != j:
                    assert L[i, j] == (-1 if G.has_edge(i, j) else 0)

    @settings(max_examples=40)
    @given(graphs())
    def test_positive_semidefinite(self, G):
        assert eigenvalues_sym(laplacian(G)).eigenvalues[0] >= -1e-9


class TestJoin:
    def test_octahedron(self):
        G = join(fam.cycle(4), fam.empty(2))
        assert (G.n, G.m) == (6, 12)
        # K_{2,2,2}: complement is a perfect matching
        assert complement(G).m == 3 and set(complement(G).degrees()) == {1}

    def test_two_points(self):
        assert join(fam.empty(1), fam.empty(1)).edges() == [(0, 1)]

    def test_path_plus_point_is_triangle(self):
        G = join(fam.path(2), fam.empty(1))
        assert G.is_complete() and G.n == 3

    @given(graphs(6), graphs(6))
    def test_edge_count_identity(self, G1, G2):
        J = join(G1, G2)
        assert J.n == G1.n + G2.n
        assert J.m == G1.m + G2.m + G1.n * G2.n


class TestComponents:
    def test_path_split(self):
        assert components_after_removal(fam.path(5), [2]) == [(0, 1), (3, 4)]

    def test_k4_single(self):
        assert components_after_removal(fam.complete(4), [0, 1]) == [(2, 3)]

    def test_star_singletons(self):
        assert components_after_removal(fam.star(7), [0]) == [(i,) for i in range(1, 7)]

    @given(graphs(), st.data())
    def test_partition(self, G, data):
        X = data.draw(st.sets(st.integers(0, G.n - 1)))
        comps = components_after_removal(G, X)
        assert sum(len(c) for c in comps) == G.n - len(X)
        owner = {v: i for i, c in enumerate(comps) for v in c}
        assert not set(owner) & X
        for u, v in G.edges():
            if u in owner and v in owner:
                assert owner[u] == owner[v]
        assert [c[0] for c in comps] == sorted(c[0] for c in comps)


class TestCrossEdges:
    def test_star(self):
        assert cross_edge_count(fam.star(7), [0]) == 6

    def test_path(self):
        assert cross_edge_count(fam.path(5), [2]) == 2

    def test_k4(self):
        # of K_4's six edges, (0,1) is inside X and (2,3) is outside
        assert cross_edge_count(fam.complete(4), [0, 1]) == 4


class TestConnectivity:
    def test_c5(self):
        assert vertex_connectivity(fam.cycle(5)) == 2

    def test_k24(self):
        assert vertex_connectivity(fam.complete_bipartite(2, 4)) == 2

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_trees(self, n):
        assert vertex_connectivity(fam.path(n)) == 1
        assert vertex_connectivity(fam.star(n)) == 1

    def test_complete_signalled(self):
        with pytest.raises(CompleteGraphError):
            vertex_connectivity(fam.complete(5))

    def test_size_limit(self):
        with pytest.raises(ValueError, match="n <= 16"):
            vertex_connectivity(fam.cycle(17))

    @settings(max_examples=60)
    @given(graphs(8))
    def test_matches_networkx(self, G):
        if G.is_complete() or G.n < 2:
            return
        ref = nx.Graph()
        ref.add_nodes_from(range(G.n))
        ref.add_edges_from(G.edges())
        assert vertex_connectivity(G) == nx.node_connectivity(ref)


class TestHighDegree:
    def test_star(self):
        assert high_degree_set(fam.star(10), 5) == (0,)

    def test_cycle(self):
        assert high_degree_set(fam.cycle(6), 3) == ()

    def test_quadrangulation_apexes(self):
        assert high_degree_set(fam.quadrangulation(8), 4) == (8, 9)


class TestEdgeListFormat:
    def test_roundtrip(self, tmp_path):
        G = fam.doublewheel(6)
        write_edge_list(G, tmp_path / "g.txt")
        assert read_edge_list(tmp_path / "g.txt") == G

    def test_sorted_output(self):
        text = format_edge_list(from_edge_list(3, [(2, 1), (1, 0)]))
        assert text == "3 2\n0 1\n1 2\n"

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("3\n", 1),
            ("3 1\n0 x\n", 2),
            ("3 1\n0 0\n", 2),
            ("3 1\n0 5\n", 2),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 1 2\n", 2),
        ],
    )
    def test_errors_carry_line(self, text, line):
        with pytest.raises(EdgeListError) as err:
            parse_edge_list(text)
        assert err.value.line == line

    def test_degree_sequence(self):
        assert degree_sequence(fam.wheel(6)) == [6] + [3] * 6
