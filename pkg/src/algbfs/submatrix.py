"""Optimal algebraic BFS by multiplication with shrinking submatrices.

Step ``k`` computes ``x[k+1] = A[V[k+1], V[k]] x[k]`` where ``V[k]`` is the
set of vertices not yet reached. The CSR kernels keep ``V`` implicitly as
the zero set of a visited array and mark each produced index immediately,
so only the first nonzero of any row is ever multiplied: a run that
reaches ``r`` vertices performs exactly ``2 (r - 1)`` semiring evaluations.

``bfs_submatrix_generic`` runs the same recurrence through a
format-agnostic masked column iterator instead of raw CSR arrays.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from typing import Protocol

import numpy as np

from . import _backend
from .graph import CsrMatrix
from .oracle import UNREACHED, BfsOutput, check_source
from .results import KernelRun, Variant, make_run
from .semiring import BOOLEAN, OpReport, Semiring, evaluate, get_semiring


def bfs_submatrix(
    a: CsrMatrix, source: int, s: Semiring = BOOLEAN, *, trace: bool = False, backend=None
) -> KernelRun:
    source = check_source(a, source)
    s = get_semiring(s)
    raw = _backend.get(backend).submatrix(
        a.row_ptr, a.col_idx, a.values, source, int(s.id), bool(trace)
    )
    return make_run(raw, Variant.SUBMATRIX, s.name, touched=raw[5], projected=raw[6])


def bfs_submatrix_allnz(
    a: CsrMatrix, source: int, s: Semiring = BOOLEAN, *, trace: bool = False, backend=None
) -> KernelRun:
    """Every nonzero joining an unprocessed pair is multiplied once.

    On a connected undirected graph this touches exactly ``m`` nonzeros.
    """
    source = check_source(a, source)
    s = get_semiring(s)
    raw = _backend.get(backend).submatrix_allnz(
        a.row_ptr, a.col_idx, a.values, source, int(s.id), bool(trace)
    )
    return make_run(raw, Variant.SUBMATRIX_ALLNZ, s.name, touched=raw[5], projected=raw[6])


class ColumnSource(Protocol):
    """Anything that can enumerate the nonzeros ``(i, A(i, j))`` of column ``j``.

    For directed graphs column ``j`` lists the egress edges of ``j``.
    """

    n: int

    def column(self, j: int) -> Iterable[tuple[int, int]]: ...


class CsrColumns:
    """Columns of a symmetric (or egress-stored) CSR matrix, read row-wise."""

    def __init__(self, a: CsrMatrix):
        self.n = a.n_rows
        self._rp = a.row_ptr.tolist()
        self._ci = a.col_idx.tolist()
        self._nz = a.values.tolist()

    def column(self, j: int) -> Iterator[tuple[int, int]]:
        for p in range(self._rp[j], self._rp[j + 1]):
            yield self._ci[p], self._nz[p]


class MappingColumns:
    """Dictionary-of-columns storage: ``{j: {i: value}}``, visited by ascending ``i``."""

    def __init__(self, n: int, columns: Mapping[int, Mapping[int, int]]):
        self.n = n
        self._cols = {j: sorted(col.items()) for j, col in columns.items()}

    @classmethod
    def from_csr(cls, a: CsrMatrix) -> MappingColumns:
        cols = {}
        for j in range(a.n_rows):
            lo, hi = a.row_ptr[j], a.row_ptr[j + 1]
            cols[j] = dict(zip(a.col_idx[lo:hi].tolist(), a.values[lo:hi].tolist()))
        return cls(a.n_rows, cols)

    def column(self, j: int) -> Iterable[tuple[int, int]]:
        return self._cols.get(j, ())


def masked_column(column: Iterable[tuple[int, int]], mask: set[int]) -> Iterator[tuple[int, int]]:
    """Nonzeros of ``column`` whose row is in ``mask`` at the time they are reached.

    The mask may shrink while the iterator is being consumed.
    """
    for i, value in column:
        if i in mask:
            yield i, value


def bfs_submatrix_generic(
    a: CsrMatrix | ColumnSource, source: int, s: Semiring = BOOLEAN
) -> KernelRun:
    s = get_semiring(s)
    cols = CsrColumns(a) if isinstance(a, CsrMatrix) else a
    n = cols.n
    if not 0 <= int(source) < n:
        raise ValueError(f"source {source} out of range for n={n}")
    levels = np.full(n, UNREACHED, dtype=np.int64)
    parents = np.full(n, n, dtype=np.int64)
    values = np.full(n, s.zero, dtype=np.int64)
    report = OpReport()
    remaining = set(range(n))
    remaining.discard(source)
    x = {source: s.one}
    levels[source] = 0
    step = 0
    while x:
        step += 1
        report.frontier_sizes.append(len(x))
        y: dict[int, int] = {}
        for j, xj in x.items():
            values[j] = xj
            for i, aij in masked_column(cols.column(j), remaining):
                y[i] = evaluate(s, y.get(i, s.zero), xj, aij, report)
                remaining.discard(i)
                levels[i] = step
                parents[i] = j
        x = y
    report.steps = len(report.frontier_sizes)
    out = BfsOutput(levels, parents, list(report.frontier_sizes), sum(report.frontier_sizes))
    return KernelRun(out, report, Variant.SUBMATRIX_GENERIC, s.name, values)

