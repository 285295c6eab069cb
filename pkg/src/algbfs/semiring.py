"""Semirings used by the BFS kernels and the operation counter.

All three semirings share one scalar domain: non-negative 64-bit integers.
``MAX_VALUE`` doubles as the tropical +inf and as the saturation ceiling
for arithmetic overflow.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

MAX_VALUE = int(np.iinfo(np.int64).max)
INF = MAX_VALUE


class SemiringId(enum.IntEnum):
    BOOLEAN = 0
    ARITHMETIC = 1
    TROPICAL = 2


def _bool_plus(a: int, b: int) -> int:
    return a | b


def _bool_times(a: int, b: int) -> int:
    return a & b


def _sat_add(a: int, b: int) -> int:
    if a > MAX_VALUE - b:
        return MAX_VALUE
    return a + b


def _sat_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    if a > MAX_VALUE // b:
        return MAX_VALUE
    return a * b


def _trop_plus(a: int, b: int) -> int:
    return a if a < b else b


def _trop_times(a: int, b: int) -> int:
    if a == INF or b == INF:
        return INF
    return _sat_add(a, b)


@dataclass(frozen=True)
class Semiring:
    """An (plus, times, zero, one) algebra over the shared int64 domain.

    ``one`` is the value a source vertex starts with; edge weights are
    always stored as 1 regardless of semiring.
    """

    id: SemiringId
    zero: int
    one: int
    plus: Callable[[int, int], int] = field(repr=False)
    times: Callable[[int, int], int] = field(repr=False)

    @property
    def name(self) -> str:
        return self.id.name.lower()

    def is_zero(self, a: int) -> bool:
        return a == self.zero


BOOLEAN = Semiring(SemiringId.BOOLEAN, 0, 1, _bool_plus, _bool_times)
ARITHMETIC = Semiring(SemiringId.ARITHMETIC, 0, 1, _sat_add, _sat_mul)
TROPICAL = Semiring(SemiringId.TROPICAL, INF, 0, _trop_plus, _trop_times)

SEMIRINGS = {s.name: s for s in (BOOLEAN, ARITHMETIC, TROPICAL)}


def get_semiring(name: str | Semiring | SemiringId) -> Semiring:
    """Resolve a semiring from its CLI name (``boolean|arithmetic|tropical``)."""
    if isinstance(name, Semiring):
        return name
    if isinstance(name, SemiringId):
        return (BOOLEAN, ARITHMETIC, TROPICAL)[int(name)]
    try:
        return SEMIRINGS[name.lower()]
    except KeyError:
        raise ValueError(
            f"unknown semiring {name!r}; expected one of {sorted(SEMIRINGS)}"
        ) from None


@dataclass
class OpReport:
    """Structural operation counts for one kernel run.

    Every multiplied nonzero costs one plus and one times, so
    ``semiring_evals == 2 * nonzeros_touched`` always holds.
    """

    semiring_evals: int = 0
    nonzeros_touched: int = 0
    steps: int = 0
    frontier_sizes: list[int] = field(default_factory=list)

    def merge(self, other: OpReport) -> None:
        # Worker reports share the step structure of the run; only counts add.
        self.semiring_evals += other.semiring_evals
        self.nonzeros_touched += other.nonzeros_touched

    @classmethod
    def from_touched(cls, touched: int, frontier_sizes) -> OpReport:
        sizes = [int(s) for s in frontier_sizes]
        return cls(2 * int(touched), int(touched), len(sizes), sizes)


def evaluate(s: Semiring, acc: int, x: int, a: int, counter: OpReport) -> int:
    """Return ``acc (+) x (*) a`` and charge two evaluations to ``counter``."""
    counter.semiring_evals += 2
    counter.nonzeros_touched += 1
    return s.plus(acc, s.times(x, a))
