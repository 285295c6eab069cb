import numpy as np

from algbfs import corpus
from algbfs.graph import CsrMatrix, build_csr, normalize_edges
from algbfs.oracle import UNREACHED, bfs_combinatorial, validate_tree


def test_path5_levels(path5):
    g, a = path5
    out = bfs_combinatorial(a, g.vertex_of(2))
    assert out.levels.tolist() == [4, 0, 2, 3, 1]
    assert out.frontier_sizes == [1] * 5
    assert [(f + 1).tolist() for f in out.frontiers()] == [[2], [5], [3], [4], [1]]
    assert validate_tree(a, out, g.vertex_of(2)) == []


def test_isolated_source():
    a = build_csr(normalize_edges(4, [(1, 2), (2, 3)]))
    out = bfs_combinatorial(a, 0)
    assert out.levels.tolist() == [0] + [UNREACHED] * 3
    assert out.parents.tolist() == [4] * 4
    assert (out.reached, out.eccentricity) == (1, 0)


def _floyd_warshall(a):
    n = a.n_rows
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    r, c = a.coo()
    d[r, c] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def test_levels_equal_shortest_path_lengths():
    for directed in (False, True):
        a = build_csr(corpus.gnp(32, 0.1, seed=11, directed=directed))
        d = _floyd_warshall(a)
        for s in range(a.n_rows):
            lv = bfs_combinatorial(a, s).levels
            expect = np.full(a.n_rows, UNREACHED, dtype=np.int64)
            fin = ~np.isinf(d[s])
            expect[fin] = d[s][fin].astype(np.int64)
            assert np.array_equal(lv, expect)


def test_levels_ignore_adjacency_order():
    a = build_csr(corpus.gnp(40, 0.1, seed=3))
    r, c = a.coo()
    # same structure with every row stored in descending column order
    order = np.lexsort((-c, r))
    b = CsrMatrix(a.n_rows, a.n_cols, a.row_ptr, c[order], a.values)
    for s in (0, 7, 39):
        assert np.array_equal(bfs_combinatorial(a, s).levels, bfs_combinatorial(b, s).levels)


def test_validate_tree_catches_bad_parent(path5):
    g, a = path5
    src = g.vertex_of(2)
    out = bfs_combinatorial(a, src)
    out.parents[0] = src
    assert any("shallower" in p or "edge" in p for p in validate_tree(a, out, src))
