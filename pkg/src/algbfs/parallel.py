"""Level-synchronous parallel optimal BFS.

Within a level the frontier is cut into contiguous chunks, one per
worker. Workers read ``A`` and ``x`` and claim visited flags with an
atomic test-and-set; everything else they write is partitioned. Each
worker counts its surviving discoveries, derives its write offset into
the frontier array from the counts of lower-numbered workers, and copies
its buffer there, so the next frontier has no gaps and no duplicates.

Parents may differ from the sequential run when several workers race for
the same vertex; levels never do. With one worker the run is identical to
:func:`algbfs.submatrix.bfs_submatrix`.
"""

from __future__ import annotations

from . import _backend
from .graph import CsrMatrix
from .oracle import check_source
from .results import KernelRun, Variant, make_run
from .semiring import BOOLEAN, Semiring, get_semiring


def bfs_parallel(
    a: CsrMatrix, source: int, s: Semiring = BOOLEAN, workers: int = 1, *, backend=None
) -> KernelRun:
    """Run the parallel kernel; ``duplicates`` counts lost claim races.

    Every lost race still paid for its multiplication, so
    ``nonzeros_touched == reached - 1 + duplicates``.
    """
    if int(workers) < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    source = check_source(a, source)
    s = get_semiring(s)
    raw = _backend.get(backend).parallel(
        a.row_ptr, a.col_idx, a.values, source, int(s.id), int(workers)
    )
    return make_run(raw, Variant.PARALLEL, s.name, duplicates=int(raw[5]), workers=int(workers))
