# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled BFS kernels. Semantics match ``_pykernels`` exactly."""

import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange
from libc.stdint cimport int64_t, uint8_t

cnp.import_array()

cdef extern from *:
    """
    static inline int algbfs_claim(unsigned char *p) {
        return __atomic_exchange_n(p, (unsigned char)1, __ATOMIC_ACQ_REL) == 0;
    }
    static inline unsigned char algbfs_load(unsigned char *p) {
        return __atomic_load_n(p, __ATOMIC_ACQUIRE);
    }
    """
    int algbfs_claim(unsigned char *p) nogil
    unsigned char algbfs_load(unsigned char *p) nogil

cdef int64_t MAXV = 9223372036854775807
UNREACHED = MAXV


cdef inline int64_t s_zero(int sr) noexcept nogil:
    return MAXV if sr == 2 else 0


cdef inline int64_t s_one(int sr) noexcept nogil:
    return 0 if sr == 2 else 1


cdef inline int64_t sat_add(int64_t a, int64_t b) noexcept nogil:
    if a > MAXV - b:
        return MAXV
    return a + b


cdef inline int64_t s_plus(int sr, int64_t a, int64_t b) noexcept nogil:
    if sr == 0:
        return a | b
    if sr == 1:
        return sat_add(a, b)
    return a if a < b else b


cdef inline int64_t s_times(int sr, int64_t a, int64_t b) noexcept nogil:
    if sr == 0:
        return a & b
    if sr == 1:
        if a == 0 or b == 0:
            return 0
        if a > MAXV // b:
            return MAXV
        return a * b
    if a == MAXV or b == MAXV:
        return MAXV
    return sat_add(a, b)


cdef tuple _outputs(int64_t n, int sr):
    levels = np.full(n, MAXV, dtype=np.int64)
    parents = np.full(n, n, dtype=np.int64)
    values = np.full(n, s_zero(sr), dtype=np.int64)
    return levels, parents, values


def spmv(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
         int64_t source, int sr):
    cdef int64_t n = rp.shape[0] - 1
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    x_a = np.full(n, zero, dtype=np.int64)
    y_a = np.full(n, zero, dtype=np.int64)
    new_a = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] x = x_a
    cdef int64_t[::1] y = y_a
    cdef int64_t[::1] new = new_a
    cdef int64_t j, p, c, xj, nnew, step = 0, touched = 0, q
    sizes = [1]
    x[source] = s_one(sr)
    levels[source] = 0
    values[source] = x[source]
    while True:
        step += 1
        nnew = 0
        with nogil:
            for q in range(n):
                y[q] = zero
            for j in range(n):
                xj = x[j]
                for p in range(rp[j], rp[j + 1]):
                    c = ci[p]
                    y[c] = s_plus(sr, y[c], s_times(sr, nz[p], xj))
                    if y[c] != zero and levels[c] == MAXV:
                        levels[c] = step
                        parents[c] = j
                        new[nnew] = c
                        nnew += 1
            touched += rp[n]
            for q in range(nnew):
                values[new[q]] = y[new[q]]
        if nnew == 0:
            break
        sizes.append(nnew)
        x_a, y_a = y_a, x_a
        x = x_a
        y = y_a
    return levels_a, parents_a, values_a, sizes, touched


def spmspv(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
           int64_t source, int sr):
    cdef int64_t n = rp.shape[0] - 1
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    cdef int64_t[::1] x = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] y = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] tmp
    support_a = np.empty(max(n, 1), dtype=np.int64)
    nxt_a = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] support = support_a
    cdef int64_t[::1] nxt = nxt_a
    cdef int64_t[::1] new = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t j, p, c, xj, q, nsup = 1, nnxt, nnew, step = 0, touched = 0
    sizes = [1]
    x[source] = s_one(sr)
    levels[source] = 0
    values[source] = x[source]
    support[0] = source
    while True:
        step += 1
        nnxt = 0
        nnew = 0
        with nogil:
            for q in range(nsup):
                j = support[q]
                xj = x[j]
                for p in range(rp[j], rp[j + 1]):
                    c = ci[p]
                    if y[c] == zero:
                        nxt[nnxt] = c
                        nnxt += 1
                    y[c] = s_plus(sr, y[c], s_times(sr, nz[p], xj))
                    if levels[c] == MAXV:
                        levels[c] = step
                        parents[c] = j
                        new[nnew] = c
                        nnew += 1
                touched += rp[j + 1] - rp[j]
            for q in range(nnew):
                values[new[q]] = y[new[q]]
        if nnew == 0:
            break
        sizes.append(nnew)
        with nogil:
            for q in range(nsup):
                x[support[q]] = zero
        tmp = x
        x = y
        y = tmp
        nxt_a[:nnxt].sort()
        support_a, nxt_a = nxt_a, support_a
        support = support_a
        nxt = nxt_a
        nsup = nnxt
    return levels_a, parents_a, values_a, sizes, touched


def spmmspv(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
            int64_t source, int sr):
    cdef int64_t n = rp.shape[0] - 1
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    cdef int64_t[::1] x = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] y = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] tmp
    cdef uint8_t[::1] visited = np.zeros(n, dtype=np.uint8)
    cdef int64_t[::1] L = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t j, p, c, xj, v, pos, start = 0, end = 1, z = 1, step = 0, touched = 0
    sizes = []
    L[0] = source
    x[source] = s_one(sr)
    visited[source] = 1
    levels[source] = 0
    while start < end:
        step += 1
        sizes.append(end - start)
        with nogil:
            for pos in range(start, end):
                j = L[pos]
                xj = x[j]
                values[j] = xj
                for p in range(rp[j], rp[j + 1]):
                    c = ci[p]
                    v = s_plus(sr, y[c], s_times(sr, nz[p], xj))
                    if not visited[c]:
                        y[c] = v
                        visited[c] = 1
                        levels[c] = step
                        parents[c] = j
                        L[z] = c
                        z += 1
                touched += rp[j + 1] - rp[j]
                x[j] = zero
        start = end
        end = z
        tmp = x
        x = y
        y = tmp
    return levels_a, parents_a, values_a, sizes, touched


def submatrix(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
              int64_t source, int sr, bint trace=False):
    cdef int64_t n = rp.shape[0] - 1
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    cdef int64_t[::1] x = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] y = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] tmp
    cdef uint8_t[::1] T = np.zeros(n, dtype=np.uint8)
    L_a = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] L = L_a
    tpos_a = np.empty(max(n, 1) if trace else 1, dtype=np.int64)
    cdef int64_t[::1] tpos = tpos_a
    cdef int64_t j, p, c, xj, pos, start = 0, end = 1, z = 1, step = 0, touched = 0
    sizes = []
    L[0] = source
    x[source] = s_one(sr)
    T[source] = 1
    levels[source] = 0
    while start < end:
        step += 1
        sizes.append(end - start)
        with nogil:
            for pos in range(start, end):
                j = L[pos]
                xj = x[j]
                values[j] = xj
                for p in range(rp[j], rp[j + 1]):
                    c = ci[p]
                    if T[c] == 0:
                        y[c] = s_plus(sr, y[c], s_times(sr, nz[p], xj))
                        L[z] = c
                        T[c] = 1
                        z += 1
                        levels[c] = step
                        parents[c] = j
                        if trace:
                            tpos[touched] = p
                        touched += 1
                T[j] = 1
                x[j] = zero
        start = end
        end = z
        tmp = x
        x = y
        y = tmp
    if trace:
        return (levels_a, parents_a, values_a, sizes, touched,
                tpos_a[:touched].copy(), L_a[:z].copy())
    return levels_a, parents_a, values_a, sizes, touched, None, None


def submatrix_allnz(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
                    int64_t source, int sr, bint trace=False):
    cdef int64_t n = rp.shape[0] - 1
    cdef int64_t nnz = rp[n]
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    cdef int64_t[::1] x = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] y = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] tmp
    cdef uint8_t[::1] T = np.zeros(n, dtype=np.uint8)
    # at most one entry per touched nonzero plus the source
    cdef int64_t[::1] L = np.empty(nnz + 1, dtype=np.int64)
    tpos_a = np.empty(max(nnz, 1) if trace else 1, dtype=np.int64)
    proj_a = np.empty(max(n, 1) if trace else 1, dtype=np.int64)
    cdef int64_t[::1] tpos = tpos_a
    cdef int64_t[::1] proj = proj_a
    cdef int64_t j, p, c, xj, pos, start = 0, end = 1, z = 1, step = 0
    cdef int64_t touched = 0, processed, nproj = 0
    sizes = []
    L[0] = source
    x[source] = s_one(sr)
    levels[source] = 0
    while start < end:
        step += 1
        processed = 0
        with nogil:
            for pos in range(start, end):
                j = L[pos]
                if T[j]:
                    x[j] = zero
                    continue
                processed += 1
                xj = x[j]
                values[j] = xj
                if trace:
                    proj[nproj] = j
                    nproj += 1
                for p in range(rp[j], rp[j + 1]):
                    c = ci[p]
                    if T[c] == 0:
                        y[c] = s_plus(sr, y[c], s_times(sr, nz[p], xj))
                        L[z] = c
                        z += 1
                        if levels[c] == MAXV:
                            levels[c] = step
                            parents[c] = j
                        if trace:
                            tpos[touched] = p
                        touched += 1
                T[j] = 1
                x[j] = zero
        if processed:
            sizes.append(processed)
        start = end
        end = z
        tmp = x
        x = y
        y = tmp
    if trace:
        return (levels_a, parents_a, values_a, sizes, touched,
                tpos_a[:touched].copy(), proj_a[:nproj].copy())
    return levels_a, parents_a, values_a, sizes, touched, None, None


cdef void _discover(int w, const int64_t *bounds, const int64_t *rp, const int64_t *ci,
                    const int64_t *nz, int sr, int64_t *L, int64_t *x, int64_t *values,
                    unsigned char *T, int64_t *buf_c, int64_t *buf_j, int64_t *buf_v,
                    const int64_t *buf_off, int64_t *buf_len, int64_t *owner,
                    int64_t *touched, int64_t *dups) noexcept nogil:
    cdef int64_t pos, j, p, c, xj, v, k = buf_off[w]
    cdef int64_t zero = s_zero(sr)
    for pos in range(bounds[w], bounds[w + 1]):
        j = L[pos]
        xj = x[j]
        values[j] = xj
        for p in range(rp[j], rp[j + 1]):
            c = ci[p]
            if algbfs_load(&T[c]) == 0:
                v = s_plus(sr, zero, s_times(sr, nz[p], xj))
                touched[w] += 1
                if algbfs_claim(&T[c]):
                    owner[c] = w
                    buf_c[k] = c
                    buf_j[k] = j
                    buf_v[k] = v
                    k += 1
                else:
                    dups[w] += 1
        x[j] = zero
    buf_len[w] = k - buf_off[w]


cdef void _dedup(int w, int64_t step, int64_t *buf_c, int64_t *buf_j, int64_t *buf_v,
                 const int64_t *buf_off, const int64_t *buf_len, const int64_t *owner,
                 int64_t *y, int64_t *levels, int64_t *parents,
                 int64_t *counts) noexcept nogil:
    cdef int64_t q, c, k = buf_off[w]
    for q in range(buf_off[w], buf_off[w] + buf_len[w]):
        c = buf_c[q]
        if owner[c] == w:
            y[c] = buf_v[q]
            levels[c] = step
            parents[c] = buf_j[q]
            buf_c[k] = c
            k += 1
    counts[w] = k - buf_off[w]


cdef void _publish(int w, int64_t z, const int64_t *counts, const int64_t *buf_c,
                   const int64_t *buf_off, int64_t *L) noexcept nogil:
    cdef int64_t q, offset = z
    for q in range(w):
        offset += counts[q]
    for q in range(counts[w]):
        L[offset + q] = buf_c[buf_off[w] + q]


def parallel(const int64_t[::1] rp, const int64_t[::1] ci, const int64_t[::1] nz,
             int64_t source, int sr, int workers):
    if workers < 1:
        raise ValueError("workers must be >= 1")
    cdef int64_t n = rp.shape[0] - 1
    cdef int nw = workers
    levels_a, parents_a, values_a = _outputs(n, sr)
    cdef int64_t[::1] levels = levels_a
    cdef int64_t[::1] parents = parents_a
    cdef int64_t[::1] values = values_a
    cdef int64_t zero = s_zero(sr)
    cdef int64_t[::1] x = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] y = np.full(n, zero, dtype=np.int64)
    cdef int64_t[::1] tmp
    cdef uint8_t[::1] T = np.zeros(n, dtype=np.uint8)
    cdef int64_t[::1] owner = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] L = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t cap = max(rp[n], 1)
    cdef int64_t[::1] buf_c = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] buf_j = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] buf_v = np.empty(cap, dtype=np.int64)
    cdef int64_t[::1] bounds = np.empty(nw + 1, dtype=np.int64)
    cdef int64_t[::1] buf_off = np.empty(nw, dtype=np.int64)
    cdef int64_t[::1] buf_len = np.zeros(nw, dtype=np.int64)
    cdef int64_t[::1] counts = np.zeros(nw, dtype=np.int64)
    cdef int64_t[::1] touched = np.zeros(nw, dtype=np.int64)
    cdef int64_t[::1] dups = np.zeros(nw, dtype=np.int64)
    cdef int64_t start = 0, end = 1, z = 1, step = 0, span, q, r, acc, pos, total
    cdef int w
    sizes = []
    L[0] = source
    x[source] = s_one(sr)
    T[source] = 1
    levels[source] = 0
    while start < end:
        step += 1
        sizes.append(end - start)
        span = end - start
        q = span // nw
        r = span % nw
        bounds[0] = start
        for w in range(nw):
            bounds[w + 1] = bounds[w] + q + (1 if w < r else 0)
        # each worker's buffer region is sized by the degrees of its chunk
        acc = 0
        for w in range(nw):
            buf_off[w] = acc
            for pos in range(bounds[w], bounds[w + 1]):
                acc += rp[L[pos] + 1] - rp[L[pos]]
        with nogil:
            for w in prange(nw, num_threads=nw, schedule="static", chunksize=1):
                _discover(w, &bounds[0], &rp[0], &ci[0], &nz[0],
                          sr, &L[0], &x[0], &values[0], &T[0], &buf_c[0], &buf_j[0],
                          &buf_v[0], &buf_off[0], &buf_len[0], &owner[0],
                          &touched[0], &dups[0])
            for w in prange(nw, num_threads=nw, schedule="static", chunksize=1):
                _dedup(w, step, &buf_c[0], &buf_j[0], &buf_v[0], &buf_off[0],
                       &buf_len[0], &owner[0], &y[0], &levels[0], &parents[0],
                       &counts[0])
            for w in prange(nw, num_threads=nw, schedule="static", chunksize=1):
                _publish(w, z, &counts[0], &buf_c[0], &buf_off[0], &L[0])
        total = 0
        for w in range(nw):
            total += counts[w]
        z += total
        start = end
        end = z
        tmp = x
        x = y
        y = tmp
    total = 0
    acc = 0
    for w in range(nw):
        total += touched[w]
        acc += dups[w]
    return levels_a, parents_a, values_a, sizes, total, acc
