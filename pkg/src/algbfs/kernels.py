"""One entry point for every BFS variant, selected by name."""

from __future__ import annotations

from .baselines import bfs_spmmspv, bfs_spmspv, bfs_spmv
from .graph import CsrMatrix
from .parallel import bfs_parallel
from .results import KernelRun, Variant
from .semiring import BOOLEAN
from .submatrix import bfs_submatrix, bfs_submatrix_allnz, bfs_submatrix_generic

ALGEBRAIC = [
    Variant.SPMV,
    Variant.SPMSPV,
    Variant.SPMMSPV,
    Variant.SUBMATRIX,
    Variant.SUBMATRIX_ALLNZ,
    Variant.SUBMATRIX_GENERIC,
    Variant.PARALLEL,
]


def run_variant(
    variant, a: CsrMatrix, source: int, s=BOOLEAN, *, workers: int = 1, backend=None
) -> KernelRun:
    v = Variant(variant)
    if v is Variant.SPMV:
        return bfs_spmv(a, source, s, backend=backend)
    if v is Variant.SPMSPV:
        return bfs_spmspv(a, source, s, backend=backend)
    if v is Variant.SPMMSPV:
        return bfs_spmmspv(a, source, s, backend=backend)
    if v is Variant.SUBMATRIX:
        return bfs_submatrix(a, source, s, backend=backend)
    if v is Variant.SUBMATRIX_ALLNZ:
        return bfs_submatrix_allnz(a, source, s, backend=backend)
    if v is Variant.SUBMATRIX_GENERIC:
        return bfs_submatrix_generic(a, source, s)
    if v is Variant.PARALLEL:
        return bfs_parallel(a, source, s, workers, backend=backend)
    raise ValueError(f"{v.value} is not an algebraic variant")
