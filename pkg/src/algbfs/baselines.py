"""Baseline algebraic BFS kernels instrumented for operation counts.

* ``bfs_spmv`` multiplies every stored nonzero on every step.
* ``bfs_spmspv`` multiplies the rows of all of supp(x) with no mask, so
  already visited vertices keep reappearing in the vector.
* ``bfs_spmmspv`` multiplies each frontier row once and applies the
  visited test after the multiplication.

The unmasked variants never reach an empty vector by themselves; they stop
after the first step that discovers nothing, which is the level count of
the combinatorial search.
"""

from __future__ import annotations

from . import _backend
from .graph import CsrMatrix
from .oracle import check_source
from .results import KernelRun, Variant, make_run
from .semiring import BOOLEAN, Semiring, get_semiring


def _call(fn_name, variant, a: CsrMatrix, source, s, backend) -> KernelRun:
    source = check_source(a, source)
    s = get_semiring(s)
    fn = getattr(_backend.get(backend), fn_name)
    raw = fn(a.row_ptr, a.col_idx, a.values, source, int(s.id))
    return make_run(raw, variant, s.name)


def bfs_spmv(a: CsrMatrix, source: int, s: Semiring = BOOLEAN, *, backend=None) -> KernelRun:
    return _call("spmv", Variant.SPMV, a, source, s, backend)


def bfs_spmspv(a: CsrMatrix, source: int, s: Semiring = BOOLEAN, *, backend=None) -> KernelRun:
    return _call("spmspv", Variant.SPMSPV, a, source, s, backend)


def bfs_spmmspv(a: CsrMatrix, source: int, s: Semiring = BOOLEAN, *, backend=None) -> KernelRun:
    return _call("spmmspv", Variant.SPMMSPV, a, source, s, backend)
