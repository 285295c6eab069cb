"""Edge lists and compressed-sparse-row adjacency matrices.

Row ``i`` of a CSR adjacency matrix holds the out-neighbours of ``i``.
For undirected graphs every edge is stored in both directions, so the
matrix is structurally symmetric with ``nnz == 2 * m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .semiring import BOOLEAN, Semiring

INDEX = np.int64


class GraphError(ValueError):
    """Raised for malformed graphs or matrices."""


@dataclass(frozen=True)
class EdgeList:
    """A normalized simple graph on vertices ``0..n-1``.

    ``edges`` is an ``(m, 2)`` integer array sorted lexicographically.
    Undirected edges are stored once with ``u < v``. ``labels[i]`` is the
    external id that vertex ``i`` was remapped from.
    """

    n: int
    edges: np.ndarray
    directed: bool = False
    labels: np.ndarray | None = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return int(self.edges.shape[0])

    def label_of(self, v: int) -> int:
        return int(self.labels[v]) if self.labels is not None else int(v)

    def vertex_of(self, label: int) -> int:
        """Map an external id back to its internal vertex index."""
        if self.labels is None:
            if not 0 <= label < self.n:
                raise GraphError(f"vertex {label} out of range for n={self.n}")
            return int(label)
        pos = int(np.searchsorted(self.labels, label))
        if pos >= self.n or int(self.labels[pos]) != label:
            raise GraphError(f"unknown vertex id {label}")
        return pos

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeList):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and np.array_equal(self.edges, other.edges)
        )

    __hash__ = None  # type: ignore[assignment]


def normalize_edges(n: int, pairs, directed: bool = False, labels=None) -> EdgeList:
    """Drop self loops and duplicate pairs and return a sorted EdgeList.

    Vertex indices must already lie in ``0..n-1``.
    """
    arr = np.asarray(pairs, dtype=INDEX).reshape(-1, 2)
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = arr[(arr < 0) | (arr >= n)][0]
        raise GraphError(f"vertex index {int(bad)} out of range for n={n}")
    arr = arr[arr[:, 0] != arr[:, 1]]
    if not directed:
        arr = np.sort(arr, axis=1)
    if arr.size:
        arr = np.unique(arr, axis=0)
    if labels is not None:
        labels = np.asarray(labels, dtype=INDEX)
    return EdgeList(int(n), arr.astype(INDEX), bool(directed), labels)


@dataclass(frozen=True, eq=False)
class CsrMatrix:
    n_rows: int
    n_cols: int
    row_ptr: np.ndarray
    col_idx: np.ndarray
    values: np.ndarray

    @property
    def nnz(self) -> int:
        return int(self.row_ptr[-1])

    @property
    def n(self) -> int:
        return self.n_rows

    def row(self, i: int) -> np.ndarray:
        return self.col_idx[self.row_ptr[i] : self.row_ptr[i + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.row_ptr)

    def validate(self) -> None:
        rp, ci = self.row_ptr, self.col_idx
        if rp.shape != (self.n_rows + 1,) or rp[0] != 0:
            raise GraphError("row_ptr must have n_rows+1 entries starting at 0")
        if np.any(np.diff(rp) < 0):
            raise GraphError("row_ptr must be non-decreasing")
        if ci.shape != (self.nnz,) or self.values.shape != (self.nnz,):
            raise GraphError("col_idx/values length must equal nnz")
        if self.nnz and (ci.min() < 0 or ci.max() >= self.n_cols):
            raise GraphError("column index out of range")
        # strictly ascending within rows: a descent is only allowed at a row start
        if self.nnz > 1:
            descents = np.flatnonzero(np.diff(ci) <= 0) + 1
            starts = np.zeros(self.nnz, dtype=bool)
            starts[rp[1:-1][rp[1:-1] < self.nnz]] = True
            if not np.all(starts[descents]):
                raise GraphError("column indices must be strictly ascending per row")

    def coo(self) -> tuple[np.ndarray, np.ndarray]:
        rows = np.repeat(np.arange(self.n_rows, dtype=INDEX), self.degrees())
        return rows, self.col_idx.copy()

    def is_symmetric(self) -> bool:
        if self.n_rows != self.n_cols:
            return False
        return structurally_equal(self, transpose(self))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
        rows, cols = self.coo()
        out[rows, cols] = self.values
        return out


def structurally_equal(a: CsrMatrix, b: CsrMatrix) -> bool:
    return (
        a.n_rows == b.n_rows
        and a.n_cols == b.n_cols
        and np.array_equal(a.row_ptr, b.row_ptr)
        and np.array_equal(a.col_idx, b.col_idx)
    )


def csr_from_coo(n_rows: int, n_cols: int, rows, cols, vals=None) -> CsrMatrix:
    """Assemble a CSR matrix with rows sorted by column. Duplicates are kept."""
    rows = np.asarray(rows, dtype=INDEX)
    cols = np.asarray(cols, dtype=INDEX)
    if vals is None:
        vals = np.ones(rows.shape[0], dtype=np.int64)
    vals = np.asarray(vals, dtype=np.int64)
    order = np.lexsort((cols, rows))
    counts = np.bincount(rows, minlength=n_rows) if rows.size else np.zeros(n_rows, INDEX)
    row_ptr = np.zeros(n_rows + 1, dtype=INDEX)
    np.cumsum(counts, out=row_ptr[1:])
    return CsrMatrix(n_rows, n_cols, row_ptr, cols[order], vals[order])


def build_csr(g: EdgeList, s: Semiring = BOOLEAN) -> CsrMatrix:
    """Adjacency matrix of ``g``; every stored value is the unit edge weight 1.

    The semiring argument is accepted for symmetry with the kernels: all
    three semirings use 1 as the edge value (a unit weight for tropical).
    """
    del s
    e = np.asarray(g.edges, dtype=INDEX).reshape(-1, 2)
    if e.size and (e.min() < 0 or e.max() >= g.n):
        raise GraphError(f"edge endpoint out of range for n={g.n}")
    if g.directed:
        rows, cols = e[:, 0], e[:, 1]
    else:
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
    return csr_from_coo(g.n, g.n, rows, cols)


def transpose(a: CsrMatrix) -> CsrMatrix:
    rows, cols = a.coo()
    return csr_from_coo(a.n_cols, a.n_rows, cols, rows, a.values)


def csr_to_edgelist(a: CsrMatrix, directed: bool = False) -> EdgeList:
    """Inverse of :func:`build_csr` for simple graphs."""
    rows, cols = a.coo()
    pairs = np.stack([rows, cols], axis=1)
    if not directed:
        pairs = pairs[pairs[:, 0] < pairs[:, 1]]
    return normalize_edges(a.n_rows, pairs, directed)


@dataclass(frozen=True)
class DegreeStats:
    n: int
    m: int
    min_deg: int
    max_deg: int
    mean_deg: float


def degree_stats(a: CsrMatrix) -> DegreeStats:
    """Vertex/edge counts and degree summary of an undirected adjacency matrix."""
    if not a.is_symmetric():
        raise GraphError("degree_stats expects a symmetric (undirected) matrix")
    deg = a.degrees()
    n = a.n_rows
    m = a.nnz // 2
    if n == 0:
        return DegreeStats(0, 0, 0, 0, 0.0)
    return DegreeStats(n, m, int(deg.min()), int(deg.max()), 2.0 * m / n)
