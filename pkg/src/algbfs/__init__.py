"""Algebraic breadth-first search over progressively smaller masked submatrices."""

from ._backend import DEFAULT as BACKEND
from .baselines import bfs_spmmspv, bfs_spmspv, bfs_spmv
from .graph import CsrMatrix, EdgeList, build_csr, degree_stats, normalize_edges, transpose
from .ingest import parse_snap, stats
from .kernels import run_variant
from .oracle import UNREACHED, BfsOutput, bfs_combinatorial
from .parallel import bfs_parallel
from .results import KernelRun, Variant
from .semiring import ARITHMETIC, BOOLEAN, TROPICAL, OpReport, Semiring, evaluate, get_semiring
from .submatrix import bfs_submatrix, bfs_submatrix_allnz, bfs_submatrix_generic

__all__ = [
    "ARITHMETIC",
    "BACKEND",
    "BOOLEAN",
    "BfsOutput",
    "CsrMatrix",
    "EdgeList",
    "KernelRun",
    "OpReport",
    "Semiring",
    "TROPICAL",
    "UNREACHED",
    "Variant",
    "bfs_combinatorial",
    "bfs_parallel",
    "bfs_spmmspv",
    "bfs_spmspv",
    "bfs_spmv",
    "bfs_submatrix",
    "bfs_submatrix_allnz",
    "bfs_submatrix_generic",
    "build_csr",
    "degree_stats",
    "evaluate",
    "get_semiring",
    "normalize_edges",
    "parse_snap",
    "run_variant",
    "stats",
    "transpose",
]
