"""Dense, small-scale checks of the selection-matrix identities behind the
submatrix recurrence.

Everything here works on full ``n x n`` numpy arrays (``n <= 64``) with
vectorized semiring products, independent of the CSR kernels it is used
to cross-check. A dense matrix "under semiring s" stores ``s.zero`` where
there is no entry; a selection matrix stores ``s.one`` on its selected
diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import CsrMatrix
from .semiring import INF, MAX_VALUE, Semiring, SemiringId, get_semiring

MAX_DENSE_N = 64
_FLOAT_EXACT = 2**53

DenseSquareMatrix = np.ndarray


class VerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class SelectionMatrix:
    """Diagonal 0/1 mask; ``diag[i]`` keeps row and column ``i``."""

    diag: np.ndarray

    @property
    def n(self) -> int:
        return int(self.diag.shape[0])

    def dense(self, s: Semiring) -> np.ndarray:
        out = np.full((self.n, self.n), s.zero, dtype=np.int64)
        idx = np.flatnonzero(self.diag)
        out[idx, idx] = s.one
        return out

    def is_idempotent(self, s: Semiring) -> bool:
        d = self.dense(s)
        return np.array_equal(dense_matmul(d, d, s), d)


def to_semiring(adjacency: np.ndarray, s: Semiring) -> np.ndarray:
    """0/1 adjacency pattern to a dense matrix with unit weights under ``s``."""
    return np.where(np.asarray(adjacency) != 0, 1, s.zero).astype(np.int64)


def support(x: np.ndarray, s: Semiring) -> np.ndarray:
    return np.flatnonzero(np.asarray(x) != s.zero)


def dense_matmul(a: np.ndarray, b: np.ndarray, s: Semiring) -> np.ndarray:
    """Semiring product of dense matrices (or matrix and column block)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] != b.shape[0]:
        raise ValueError(f"dimension mismatch {a.shape} x {b.shape}")
    if s.id is SemiringId.BOOLEAN:
        return ((a != 0).astype(np.int64) @ (b != 0).astype(np.int64) > 0).astype(np.int64)
    if s.id is SemiringId.ARITHMETIC:
        exact = a.astype(object) @ b.astype(object)
        return np.minimum(exact, MAX_VALUE).astype(np.int64)
    finite = np.concatenate([a[a != INF], b[b != INF]])
    if finite.size and finite.max() >= _FLOAT_EXACT:
        raise ValueError("tropical dense product only supports values below 2**53")
    af = np.where(a == INF, np.inf, a.astype(np.float64))
    bf = np.where(b == INF, np.inf, b.astype(np.float64))
    best = (af[:, :, None] + bf[None, :, :]).min(axis=1)
    out = np.full(best.shape, INF, dtype=np.int64)
    fin = ~np.isinf(best)
    out[fin] = best[fin].astype(np.int64)
    return out


def dense_matvec(a: np.ndarray, x: np.ndarray, s: Semiring) -> np.ndarray:
    return dense_matmul(a, np.asarray(x).reshape(-1, 1), s)[:, 0]


def dense_transpose_matvec(a, x, s: Semiring) -> np.ndarray:
    """``y = A^T x`` under ``s``.

    A CSR input is multiplied row by row, scattering ``nz (*) x(i)`` into
    ``y(col)``; a dense input goes through :func:`dense_matmul`.
    """
    s = get_semiring(s)
    x = np.asarray(x, dtype=np.int64)
    if isinstance(a, CsrMatrix):
        if x.shape != (a.n_rows,):
            raise ValueError(f"vector of length {x.shape} for {a.n_rows} rows")
        y = [s.zero] * a.n_cols
        rp, ci, nz, xs = a.row_ptr.tolist(), a.col_idx.tolist(), a.values.tolist(), x.tolist()
        for i in range(a.n_rows):
            for p in range(rp[i], rp[i + 1]):
                y[ci[p]] = s.plus(y[ci[p]], s.times(nz[p], xs[i]))
        return np.array(y, dtype=np.int64)
    a = np.asarray(a, dtype=np.int64)
    if a.ndim != 2 or x.shape != (a.shape[0],):
        raise ValueError(f"dimension mismatch {a.shape} and {x.shape}")
    return dense_matvec(a.T, x, s)


@dataclass
class SelectionStep:
    """State at step ``k``: mask ``S_k``, masked matrix ``A_k`` and vector ``x_k``.

    ``frontier`` is the set of vertices first reached at this step (the
    support of ``x_k`` restricted to ``V_k``).
    """

    k: int
    selection: SelectionMatrix
    masked: np.ndarray
    x: np.ndarray
    frontier: np.ndarray


def _check_input(adjacency: np.ndarray, source: int) -> np.ndarray:
    adj = np.asarray(adjacency)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency must be square")
    if adj.shape[0] > MAX_DENSE_N:
        raise ValueError(f"dense verification is limited to n <= {MAX_DENSE_N}")
    pattern = adj != 0
    if not np.array_equal(pattern, pattern.T):
        raise ValueError("adjacency must be symmetric")
    if not 0 <= source < adj.shape[0]:
        raise ValueError(f"source {source} out of range")
    return pattern.astype(np.int64)


def dense_adjacency(a: CsrMatrix) -> np.ndarray:
    return (a.to_dense() != 0).astype(np.int64)


def selection_sequence(adjacency, source: int, s: Semiring) -> list[SelectionStep]:
    """Run the symmetric masked recurrence ``x[k+1] = A_k x[k]``.

    ``A_k`` is built both from the previous step (``S_k A_{k-1} S_k``) and
    directly (``S_k A S_k``); a disagreement raises ``VerificationError``.
    The sequence ends with the first step whose frontier is empty
    (that step is not included).
    """
    s = get_semiring(s)
    if isinstance(adjacency, CsrMatrix):
        adjacency = dense_adjacency(adjacency)
    pattern = _check_input(adjacency, source)
    n = pattern.shape[0]
    A = to_semiring(pattern, s)
    remaining = np.ones(n, dtype=bool)
    x = np.full(n, s.zero, dtype=np.int64)
    x[source] = s.one
    steps: list[SelectionStep] = []
    prev_masked = None
    k = 1
    while True:
        sel = SelectionMatrix(remaining.astype(np.int64))
        sd = sel.dense(s)
        direct = dense_matmul(dense_matmul(sd, A, s), sd, s)
        if prev_masked is None:
            recurrent = A.copy()
        else:
            recurrent = dense_matmul(dense_matmul(sd, prev_masked, s), sd, s)
        if not np.array_equal(direct, recurrent):
            raise VerificationError(f"A_{k} differs between S_k A S_k and S_k A_(k-1) S_k")
        frontier = np.flatnonzero((x != s.zero) & remaining)
        if frontier.size == 0:
            break
        steps.append(SelectionStep(k, sel, direct, x, frontier))
        remaining = remaining.copy()
        remaining[support(x, s)] = False
        x = dense_matvec(direct, x, s)
        prev_masked = direct
        k += 1
    return steps


@dataclass
class IdentityReport:
    """Outcome of the matrix identity checks for one (graph, source, semiring)."""

    steps: int
    selection_product: bool = True
    recurrence_vs_direct: bool = True
    transform: bool = True
    intermediate: bool = True
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass
class TransformCheck:
    k: int
    lhs: np.ndarray
    rhs: np.ndarray
    exact: bool
    entrywise: bool
    support_equal: bool
    intermediate: bool

    @property
    def passed(self) -> bool:
        agree = self.entrywise if self.exact else self.support_equal
        return agree and self.intermediate


def _agree(u: np.ndarray, v: np.ndarray, s: Semiring) -> bool:
    if s.id is SemiringId.BOOLEAN:
        return np.array_equal(u, v)
    return np.array_equal(support(u, s), support(v, s))


def verify_linear_transform(adjacency, source: int, s: Semiring, k: int) -> TransformCheck:
    """Compare ``x[k+1]`` from the masked recurrence with ``A_k A^(k-1) x[1]``.

    Boolean results must match entrywise; the other semirings only in
    support, since walk multiplicities differ between the two sides.
    Also checks ``A_k y_k == A_k x_k`` for ``y_k = A^(k-1) x_1``.
    """
    s = get_semiring(s)
    if isinstance(adjacency, CsrMatrix):
        adjacency = dense_adjacency(adjacency)
    pattern = _check_input(adjacency, source)
    seq = selection_sequence(pattern, source, s)
    if not 1 <= k <= len(seq):
        raise ValueError(f"step {k} out of range 1..{len(seq)}")
    A = to_semiring(pattern, s)
    step = seq[k - 1]
    lhs = dense_matvec(step.masked, step.x, s)
    y = np.full(A.shape[0], s.zero, dtype=np.int64)
    y[source] = s.one
    for _ in range(k - 1):
        y = dense_matvec(A, y, s)
    rhs = dense_matvec(step.masked, y, s)
    exact = s.id is SemiringId.BOOLEAN
    return TransformCheck(
        k,
        lhs,
        rhs,
        exact=exact,
        entrywise=bool(np.array_equal(lhs, rhs)),
        support_equal=bool(np.array_equal(support(lhs, s), support(rhs, s))),
        intermediate=_agree(dense_matvec(step.masked, y, s), lhs, s),
    )


def verify_identities(adjacency, source: int, s: Semiring) -> IdentityReport:
    """Check every selection identity and the linear transformation at every step."""
    s = get_semiring(s)
    if isinstance(adjacency, CsrMatrix):
        adjacency = dense_adjacency(adjacency)
    pattern = _check_input(adjacency, source)
    try:
        seq = selection_sequence(pattern, source, s)
    except VerificationError as exc:
        rep = IdentityReport(0, recurrence_vs_direct=False)
        rep.failures.append(str(exc))
        return rep
    rep = IdentityReport(len(seq))
    for prev, cur in zip(seq, seq[1:]):
        sn, sp = cur.selection.dense(s), prev.selection.dense(s)
        if not np.array_equal(dense_matmul(sn, sp, s), sn):
            rep.selection_product = False
            rep.failures.append(f"S_{cur.k} S_{prev.k} != S_{cur.k}")
    for step in seq:
        if not step.selection.is_idempotent(s):
            rep.selection_product = False
            rep.failures.append(f"S_{step.k} is not idempotent")
    for k in range(1, len(seq) + 1):
        chk = verify_linear_transform(pattern, source, s, k)
        if not (chk.entrywise if chk.exact else chk.support_equal):
            rep.transform = False
            rep.failures.append(f"linear transformation fails at k={k}")
        if not chk.intermediate:
            rep.intermediate = False
            rep.failures.append(f"A_k y_k != A_k x_k at k={k}")
    return rep
