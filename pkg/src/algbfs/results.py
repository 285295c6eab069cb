from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .oracle import BfsOutput
from .semiring import OpReport


class Variant(str, enum.Enum):
    COMBINATORIAL = "combinatorial"
    SPMV = "spmv"
    SPMSPV = "spmspv"
    SPMMSPV = "spmmspv"
    SUBMATRIX = "submatrix"
    SUBMATRIX_ALLNZ = "submatrix-allnz"
    SUBMATRIX_GENERIC = "submatrix-generic"
    PARALLEL = "parallel"


@dataclass(eq=False)
class KernelRun:
    """Output of one algebraic BFS kernel.

    ``values`` holds each reached vertex's vector entry at the step it was
    on the frontier (semiring zero elsewhere). ``touched`` and
    ``projected`` are only filled by traced submatrix runs: positions into
    ``col_idx`` of every multiplied nonzero, and the frontier columns in
    the order their rows were projected.
    """

    output: BfsOutput
    ops: OpReport
    variant: Variant
    semiring: str
    values: np.ndarray
    touched: np.ndarray | None = None
    projected: np.ndarray | None = None
    duplicates: int = 0
    workers: int = 1

    @property
    def levels(self) -> np.ndarray:
        return self.output.levels

    @property
    def parents(self) -> np.ndarray:
        return self.output.parents

    def same_as(self, other: KernelRun) -> bool:
        """Bit-identical outputs and counts (the variant label is ignored)."""
        return (
            self.output.same_as(other.output)
            and np.array_equal(self.values, other.values)
            and self.ops == other.ops
        )


def make_run(raw, variant: Variant, semiring: str, **extra) -> KernelRun:
    levels, parents, values, sizes, touched = raw[:5]
    sizes = [int(s) for s in sizes]
    out = BfsOutput(levels, parents, sizes, sum(sizes))
    return KernelRun(
        out, OpReport.from_touched(touched, sizes), variant, semiring, values, **extra
    )
