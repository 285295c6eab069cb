import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from algbfs.graph import (
    CsrMatrix,
    GraphError,
    build_csr,
    csr_from_coo,
    csr_to_edgelist,
    degree_stats,
    normalize_edges,
    structurally_equal,
    transpose,
)


def test_path5_csr(path5):
    g, a = path5
    a.validate()
    assert a.nnz == 8
    assert a.is_symmetric()
    # vertex 3 (1-based) is index 2; neighbours 4 and 5 (1-based)
    assert (a.row(2) + 1).tolist() == [4, 5]


def test_empty_edge_list():
    a = build_csr(normalize_edges(3, []))
    assert a.row_ptr.tolist() == [0, 0, 0, 0]
    assert a.nnz == 0


def test_directed_rows_hold_out_neighbours():
    a = build_csr(normalize_edges(3, [(0, 1), (1, 2)], directed=True))
    assert [a.row(i).tolist() for i in range(3)] == [[1], [2], []]


def test_out_of_range_vertex_rejected():
    with pytest.raises(GraphError):
        normalize_edges(3, [(0, 3)])


def test_normalization_drops_loops_and_duplicates():
    g = normalize_edges(4, [(1, 0), (0, 1), (2, 2), (3, 1), (1, 3)])
    assert g.edges.tolist() == [[0, 1], [1, 3]]
    d = normalize_edges(4, [(1, 0), (0, 1), (0, 1)], directed=True)
    assert d.edges.tolist() == [[0, 1], [1, 0]]


def test_transpose_symmetric_is_identity(path5):
    _, a = path5
    assert structurally_equal(transpose(a), a)


def test_transpose_directed_single_arc():
    t = transpose(build_csr(normalize_edges(2, [(0, 1)], directed=True)))
    assert [t.row(0).tolist(), t.row(1).tolist()] == [[], [0]]


def test_transpose_round_trip_random_8x8():
    rng = np.random.default_rng(3)
    dense = rng.random((8, 8)) < 0.3
    r, c = np.nonzero(dense)
    a = csr_from_coo(8, 8, r, c)
    t = transpose(a)
    assert np.array_equal(t.to_dense(), a.to_dense().T)
    assert structurally_equal(transpose(t), a)


def test_validate_rejects_unsorted_row():
    bad = CsrMatrix(2, 2, np.array([0, 2, 2]), np.array([1, 0]), np.ones(2, dtype=np.int64))
    with pytest.raises(GraphError):
        bad.validate()


def test_degree_stats(path5):
    _, a = path5
    ds = degree_stats(a)
    assert (ds.n, ds.m, ds.min_deg, ds.max_deg) == (5, 4, 1, 2)
    assert ds.mean_deg == pytest.approx(1.6)
    one = degree_stats(build_csr(normalize_edges(2, [(0, 1)])))
    assert (one.m, one.min_deg, one.max_deg) == (1, 1, 1)


def test_degree_stats_flags_asymmetric():
    with pytest.raises(GraphError):
        degree_stats(build_csr(normalize_edges(2, [(0, 1)], directed=True)))


edge_lists = st.integers(1, 20).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60),
        st.booleans(),
    )
)


@given(edge_lists)
def test_csr_round_trip_and_invariants(args):
    n, pairs, directed = args
    g = normalize_edges(n, pairs, directed)
    a = build_csr(g)
    a.validate()
    assert csr_to_edgelist(a, directed) == g
    assert a.nnz == (g.m if directed else 2 * g.m)
    if not directed:
        assert structurally_equal(transpose(a), a)
        assert np.all(g.edges[:, 0] < g.edges[:, 1]) if g.m else True
