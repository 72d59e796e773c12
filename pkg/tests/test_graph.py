import numpy as np
import pytest

from localgraph import (
    DuplicateEdgeError,
    UnknownVertexError,
    conductance,
    cut_weight,
    graph_from_edges,
    local_conductance,
    normalized_laplacian,
    volume,
)
from helpers import random_connected_graph

TRIANGLE = [(0, 1, 0.5), (1, 2, 1.0), (2, 0, 3.0)]


def k4():
    return graph_from_edges([(i, j, 1.0) for i in range(4) for j in range(i + 1, 4)])


def two_triangles():
    return graph_from_edges(
        [(0, 1, 1), (1, 2, 1), (2, 0, 1), (3, 4, 1), (4, 5, 1), (5, 3, 1)]
    )


class TestGraphFromEdges:
    def test_weighted_triangle(self):
        g = graph_from_edges(TRIANGLE)
        assert g.n == 3
        assert g.degree(0) == 3.5
        assert g.neighbors(0) == [(1, 0.5), (2, 3.0)]

    def test_empty(self):
        g = graph_from_edges([])
        assert g.n == 0
        assert g.num_edges() == 0

    def test_both_orientations_collapse(self):
        g = graph_from_edges([(0, 1, 2.0), (1, 0, 2.0)])
        assert g.num_edges() == 1
        assert g.degree(0) == 2.0

    def test_conflicting_weights_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            graph_from_edges([(0, 1, 2.0), (1, 0, 3.0)])

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges([(0, 1, -1.0)])
        with pytest.raises(ValueError):
            graph_from_edges([(0, 1, 0.0)])

    def test_negative_id_rejected(self):
        with pytest.raises(ValueError):
            graph_from_edges([(-1, 0, 1.0)])

    def test_id_gap_gives_isolated_vertices(self):
        g = graph_from_edges([(0, 3, 1.0)])
        assert g.n == 4
        assert g.degree(1) == 0.0
        assert g.neighbors(2) == []

    def test_self_loop_counts_twice(self):
        g = graph_from_edges([(0, 0, 1.5), (0, 1, 1.0)])
        assert g.degree(0) == 4.0
        # the loop is reported once, with doubled weight
        assert g.neighbors(0) == [(0, 3.0), (1, 1.0)]
        assert g.degree(0) == sum(w for _, w in g.neighbors(0))

    def test_unweighted_view_agrees_with_weighted(self):
        rng = np.random.default_rng(8)
        g = random_connected_graph(rng, 25, weighted=True)
        for v in range(g.n):
            assert g.neighbors_unweighted(v) == [u for u, _ in g.neighbors(v)]
            assert g.degree_unweighted(v) == len(g.neighbors(v))

    def test_symmetry_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            g = random_connected_graph(rng, int(rng.integers(2, 40)), weighted=True)
            for u in range(g.n):
                for v, w in g.neighbors(u):
                    assert (u, w) in g.neighbors(v)

    def test_volume_identity(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            g = random_connected_graph(rng, int(rng.integers(2, 60)), weighted=True)
            total_w = sum(w for _, _, w in g.edges())
            assert volume(g, range(g.n)) == pytest.approx(2.0 * total_w, rel=1e-12)


class TestSetStatistics:
    def test_volume_examples(self):
        g = graph_from_edges(TRIANGLE)
        assert volume(g, [0]) == 3.5
        assert volume(g, []) == 0.0
        assert volume(g, [0, 1, 2]) == 9.0

    def test_volume_unknown_vertex(self):
        with pytest.raises(UnknownVertexError):
            volume(graph_from_edges(TRIANGLE), [7])

    def test_cut_examples(self):
        assert cut_weight(graph_from_edges(TRIANGLE), [0]) == 3.5
        assert cut_weight(two_triangles(), [0, 1, 2]) == 0.0
        assert cut_weight(k4(), [0, 1]) == 4.0

    def test_conductance_examples(self):
        assert conductance(graph_from_edges(TRIANGLE), [0]) == 1.0
        assert conductance(two_triangles(), [0, 1, 2]) == 0.0
        assert conductance(k4(), [0, 1]) == pytest.approx(2.0 / 3.0)

    def test_conductance_rejects_empty_and_full(self):
        g = k4()
        with pytest.raises(ValueError):
            conductance(g, [])
        with pytest.raises(ValueError):
            conductance(g, [0, 1, 2, 3])

    def test_conductance_zero_volume(self):
        g = graph_from_edges([(0, 3, 1.0)])  # vertices 1, 2 isolated
        with pytest.raises(ValueError):
            conductance(g, [1])

    def test_local_conductance_examples(self):
        assert local_conductance(graph_from_edges(TRIANGLE), [0]) == 1.0
        assert local_conductance(two_triangles(), [3, 4, 5]) == 0.0
        assert local_conductance(k4(), [0, 1]) == pytest.approx(4.0 / 6.0)

    def test_conductance_symmetric_in_complement(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            g = random_connected_graph(rng, 12, weighted=True)
            s = [v for v in range(12) if rng.random() < 0.4]
            if not s or len(s) == 12:
                continue
            comp = [v for v in range(12) if v not in s]
            assert conductance(g, s) == pytest.approx(conductance(g, comp), rel=1e-12)
            assert 0.0 <= conductance(g, s) <= 1.0

    def test_local_equals_global_on_small_side(self):
        rng = np.random.default_rng(4)
        for _ in range(20):
            g = random_connected_graph(rng, 14, weighted=True)
            s = [v for v in range(14) if rng.random() < 0.3]
            if not s:
                continue
            if volume(g, s) <= g.total_volume() / 2:
                assert local_conductance(g, s) == pytest.approx(conductance(g, s), rel=1e-12)


class TestNormalizedLaplacian:
    def test_single_edge(self):
        lap = normalized_laplacian(graph_from_edges([(0, 1, 1.0)])).toarray()
        assert np.allclose(lap, [[1, -1], [-1, 1]])

    def test_weight_cancels(self):
        a = normalized_laplacian(graph_from_edges([(0, 1, 5.0)])).toarray()
        b = normalized_laplacian(graph_from_edges([(0, 1, 1.0)])).toarray()
        assert np.allclose(a, b)

    def test_zero_eigenvalue_with_sqrt_degree_vector(self):
        rng = np.random.default_rng(6)
        g = random_connected_graph(rng, 30, weighted=True)
        lap = normalized_laplacian(g)
        vec = np.sqrt(g.degrees)
        assert np.abs(lap @ vec).max() < 1e-9

    def test_eigenvalues_in_range(self):
        rng = np.random.default_rng(7)
        for _ in range(5):
            g = random_connected_graph(rng, int(rng.integers(5, 200)), weighted=True)
            vals = np.linalg.eigvalsh(normalized_laplacian(g).toarray())
            assert vals.min() > -1e-9
            assert vals.max() < 2 + 1e-9

    def test_rejects_isolated_vertex(self):
        g = graph_from_edges([(0, 2, 1.0)])
        with pytest.raises(ValueError):
            normalized_laplacian(g)
