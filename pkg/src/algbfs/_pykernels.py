"""Pure-Python kernels. Used when the compiled extension is unavailable.

Every function takes raw CSR arrays and a semiring id and returns plain
tuples; :mod:`algbfs.kernels` wraps them into ``KernelRun`` objects.
The compiled module ``_ckernels`` exposes the same functions with the
same semantics and must stay bit-identical to this one.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .semiring import get_semiring, SemiringId

UNREACHED = int(np.iinfo(np.int64).max)


def _ops(sr):
    s = get_semiring(SemiringId(sr))
    return s.zero, s.one, s.plus, s.times


def _finish(levels, parents, values, sizes, touched):
    return (
        np.array(levels, dtype=np.int64),
        np.array(parents, dtype=np.int64),
        np.array(values, dtype=np.int64),
        list(sizes),
        touched,
    )


def spmv(row_ptr, col_idx, vals, source, sr):
    """Dense-vector BFS: every stored nonzero is multiplied on every step."""
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    x = [zero] * n
    x[source] = one
    levels[source] = 0
    values[source] = one
    sizes = [1]
    touched = 0
    step = 0
    while True:
        step += 1
        y = [zero] * n
        new = []
        for j in range(n):
            xj = x[j]
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                y[c] = plus(y[c], times(nz[p], xj))
                if y[c] != zero and levels[c] == UNREACHED:
                    levels[c] = step
                    parents[c] = j
                    new.append(c)
        touched += rp[n]
        if not new:
            break
        for c in new:
            values[c] = y[c]
        sizes.append(len(new))
        x = y
    return _finish(levels, parents, values, sizes, touched)


def spmspv(row_ptr, col_idx, vals, source, sr):
    """Sparse-vector BFS without a mask: rows of all of supp(x) each step."""
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    x = [zero] * n
    y = [zero] * n
    x[source] = one
    levels[source] = 0
    values[source] = one
    support = [source]
    sizes = [1]
    touched = 0
    step = 0
    while True:
        step += 1
        nxt = []
        new = []
        for j in support:
            xj = x[j]
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                if y[c] == zero:
                    nxt.append(c)
                y[c] = plus(y[c], times(nz[p], xj))
                if levels[c] == UNREACHED:
                    levels[c] = step
                    parents[c] = j
                    new.append(c)
            touched += rp[j + 1] - rp[j]
        if not new:
            break
        for c in new:
            values[c] = y[c]
        sizes.append(len(new))
        for j in support:
            x[j] = zero
        x, y = y, x
        nxt.sort()
        support = nxt
    return _finish(levels, parents, values, sizes, touched)


def spmmspv(row_ptr, col_idx, vals, source, sr):
    """Masked sparse-vector BFS: the visited test follows the multiplication."""
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    x = [zero] * n
    y = [zero] * n
    visited = [False] * n
    frontier_list = [source]
    x[source] = one
    visited[source] = True
    levels[source] = 0
    start, end = 0, 1
    sizes = []
    touched = 0
    step = 0
    while start < end:
        step += 1
        sizes.append(end - start)
        for pos in range(start, end):
            j = frontier_list[pos]
            xj = x[j]
            values[j] = xj
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                v = plus(y[c], times(nz[p], xj))
                if not visited[c]:
                    y[c] = v
                    visited[c] = True
                    levels[c] = step
                    parents[c] = j
                    frontier_list.append(c)
            touched += rp[j + 1] - rp[j]
            x[j] = zero
        start, end = end, len(frontier_list)
        x, y = y, x
    return _finish(levels, parents, values, sizes, touched)


def submatrix(row_ptr, col_idx, vals, source, sr, trace=False):
    """Optimal algebraic BFS over shrinking submatrices, CSR form.

    ``T`` marks vertices outside the current row mask; each newly reached
    column index is marked the moment it is produced, so a row contributes
    at most one multiplied nonzero over the whole run.
    """
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    x = [zero] * n
    y = [zero] * n
    T = [0] * n
    L = [0] * n
    L[0] = source
    x[source] = one
    T[source] = 1
    levels[source] = 0
    start, end, z = 0, 1, 1
    sizes = []
    touched = 0
    touched_pos = [] if trace else None
    projected = [] if trace else None
    step = 0
    while start < end:
        step += 1
        sizes.append(end - start)
        for pos in range(start, end):
            j = L[pos]
            xj = x[j]
            values[j] = xj
            if trace:
                projected.append(j)
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                if T[c] == 0:
                    y[c] = plus(y[c], times(nz[p], xj))
                    L[z] = c
                    T[c] = 1
                    z += 1
                    touched += 1
                    levels[c] = step
                    parents[c] = j
                    if trace:
                        touched_pos.append(p)
            T[j] = 1
            x[j] = zero
        start, end = end, z
        x, y = y, x
    out = _finish(levels, parents, values, sizes, touched)
    return out + (_opt_array(touched_pos), _opt_array(projected))


def submatrix_allnz(row_ptr, col_idx, vals, source, sr, trace=False):
    """Variant that lets every unmasked nonzero of a frontier row contribute.

    A frontier entry is skipped when already marked; discovery no longer
    marks, so the frontier array may hold duplicates.
    """
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    x = [zero] * n
    y = [zero] * n
    T = [0] * n
    L = [source]
    x[source] = one
    levels[source] = 0
    start, end = 0, 1
    sizes = []
    touched = 0
    touched_pos = [] if trace else None
    projected = [] if trace else None
    step = 0
    while start < end:
        step += 1
        processed = 0
        for pos in range(start, end):
            j = L[pos]
            if T[j]:
                x[j] = zero
                continue
            processed += 1
            xj = x[j]
            values[j] = xj
            if trace:
                projected.append(j)
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                if T[c] == 0:
                    y[c] = plus(y[c], times(nz[p], xj))
                    L.append(c)
                    touched += 1
                    if levels[c] == UNREACHED:
                        levels[c] = step
                        parents[c] = j
                    if trace:
                        touched_pos.append(p)
            T[j] = 1
            x[j] = zero
        if processed:
            sizes.append(processed)
        start, end = end, len(L)
        x, y = y, x
    out = _finish(levels, parents, values, sizes, touched)
    return out + (_opt_array(touched_pos), _opt_array(projected))


def _opt_array(items):
    return None if items is None else np.array(items, dtype=np.int64)


class _Claims:
    """Visited flags with an atomic test-and-set."""

    def __init__(self, n):
        self.flags = [0] * n
        self._lock = threading.Lock()

    def claim(self, v):
        with self._lock:
            if self.flags[v]:
                return False
            self.flags[v] = 1
            return True


def parallel(row_ptr, col_idx, vals, source, sr, workers):
    """Level-synchronous parallel BFS with per-worker discovery buffers.

    Each level runs three phases separated by barriers (the executor map
    joins): discovery with atomic claims into worker-local buffers, a
    pass that re-checks claim ownership and counts survivors, and the
    offset write of every worker's survivors into ``L``.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    zero, one, plus, times = _ops(sr)
    rp, ci, nz = row_ptr.tolist(), col_idx.tolist(), vals.tolist()
    n = len(rp) - 1
    levels = [UNREACHED] * n
    parents = [n] * n
    values = [zero] * n
    owner = [-1] * n
    x = [zero] * n
    y = [zero] * n
    claims = _Claims(n)
    T = claims.flags
    L = [0] * n
    L[0] = source
    x[source] = one
    T[source] = 1
    levels[source] = 0
    start, end, z = 0, 1, 1
    sizes = []
    touched = [0] * workers
    dups = [0] * workers
    buffers = [[] for _ in range(workers)]
    kept = [[] for _ in range(workers)]
    counts = [0] * workers
    step = 0
    bounds = []

    def discover(w):
        lo, hi = bounds[w], bounds[w + 1]
        buf = buffers[w]
        buf.clear()
        for pos in range(lo, hi):
            j = L[pos]
            xj = x[j]
            values[j] = xj
            for p in range(rp[j], rp[j + 1]):
                c = ci[p]
                if T[c] == 0:
                    v = plus(zero, times(nz[p], xj))
                    touched[w] += 1
                    if claims.claim(c):
                        owner[c] = w
                        buf.append((c, j, v))
                    else:
                        dups[w] += 1
            x[j] = zero

    def dedup(w):
        out = kept[w]
        out.clear()
        for c, j, v in buffers[w]:
            if owner[c] == w:
                y[c] = v
                levels[c] = step
                parents[c] = j
                out.append(c)
        counts[w] = len(out)

    def publish(w):
        offset = z + sum(counts[:w])
        for i, c in enumerate(kept[w]):
            L[offset + i] = c

    with ThreadPoolExecutor(max_workers=workers) as pool:
        while start < end:
            step += 1
            sizes.append(end - start)
            span = end - start
            q, r = divmod(span, workers)
            bounds = [start]
            for w in range(workers):
                bounds.append(bounds[-1] + q + (1 if w < r else 0))
            list(pool.map(discover, range(workers)))
            list(pool.map(dedup, range(workers)))
            list(pool.map(publish, range(workers)))
            z += sum(counts)
            start, end = end, z
            x, y = y, x
    out = _finish(levels, parents, values, sizes, sum(touched))
    return out + (sum(dups),)
