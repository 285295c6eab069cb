"""Queue-based BFS used as the correctness oracle for the algebraic kernels."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import CsrMatrix

UNREACHED = int(np.iinfo(np.int64).max)


@dataclass(eq=False)
class BfsOutput:
    """Per-vertex levels and parents plus per-level frontier sizes.

    Unreached vertices carry ``UNREACHED`` as level; the source and
    unreached vertices carry ``n`` as parent.
    """

    levels: np.ndarray
    parents: np.ndarray
    frontier_sizes: list[int]
    reached: int

    @property
    def n(self) -> int:
        return int(self.levels.shape[0])

    @property
    def none(self) -> int:
        return self.n

    @property
    def eccentricity(self) -> int:
        return len(self.frontier_sizes) - 1

    def frontiers(self) -> list[np.ndarray]:
        """Vertex sets of each level, ascending within a level."""
        return [np.flatnonzero(self.levels == k) for k in range(len(self.frontier_sizes))]

    def same_as(self, other: BfsOutput) -> bool:
        return (
            np.array_equal(self.levels, other.levels)
            and np.array_equal(self.parents, other.parents)
            and list(self.frontier_sizes) == list(other.frontier_sizes)
            and self.reached == other.reached
        )


def check_source(a: CsrMatrix, source: int) -> int:
    source = int(source)
    if not 0 <= source < a.n_rows:
        raise ValueError(f"source {source} out of range for n={a.n_rows}")
    return source


def bfs_combinatorial(a: CsrMatrix, source: int) -> BfsOutput:
    """Textbook BFS over the rows of ``a``; neighbours visited in stored order."""
    source = check_source(a, source)
    n = a.n_rows
    rp = a.row_ptr.tolist()
    ci = a.col_idx.tolist()
    levels = [UNREACHED] * n
    parents = [n] * n
    levels[source] = 0
    sizes = [1]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = levels[u] + 1
        for p in range(rp[u], rp[u + 1]):
            v = ci[p]
            if levels[v] == UNREACHED:
                levels[v] = du
                parents[v] = u
                if du == len(sizes):
                    sizes.append(0)
                sizes[du] += 1
                queue.append(v)
    return BfsOutput(
        np.array(levels, dtype=np.int64),
        np.array(parents, dtype=np.int64),
        sizes,
        sum(sizes),
    )


def validate_tree(a: CsrMatrix, out: BfsOutput, source: int) -> list[str]:
    """Return a list of violated BfsOutput invariants (empty when valid)."""
    problems = []
    n = a.n_rows
    lv, par = out.levels, out.parents
    if lv[source] != 0 or par[source] != n:
        problems.append("source must have level 0 and no parent")
    if sum(out.frontier_sizes) != out.reached:
        problems.append("frontier sizes do not sum to reached")
    if int(np.count_nonzero(lv != UNREACHED)) != out.reached:
        problems.append("reached count disagrees with levels")
    for v in np.flatnonzero(lv != UNREACHED):
        if v == source:
            continue
        p = int(par[v])
        if not 0 <= p < n:
            problems.append(f"vertex {v} has no parent")
            continue
        if lv[p] != lv[v] - 1:
            problems.append(f"parent of {v} is not one level shallower")
        row = a.row(p)
        pos = np.searchsorted(row, v)
        if pos >= row.size or row[pos] != v:
            problems.append(f"({p}, {v}) is not an edge")
    return problems
