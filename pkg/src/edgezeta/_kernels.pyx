# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled oracle kernels: F_p row reduction and closed-walk traces.

Same signatures as ``_kernels_py``. Inputs are any int64 buffers (array('q')).
Callers guarantee the walk counts fit in int64.
"""

from libc.stdlib cimport malloc, calloc, free


cdef long long _inv_mod(long long a, long long p):
    cdef long long t = 0, nt = 1, r = p, nr = a % p, qq, tmp
    while nr != 0:
        qq = r // nr
        tmp = t - qq * nt
        t = nt
        nt = tmp
        tmp = r - qq * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _rref(long long *M, int rows, int cols, long long p):
    cdef int rank = 0, col, r, c, piv
    cdef long long inv, f, tmp
    for r in range(rows * cols):
        M[r] = M[r] % p
        if M[r] < 0:
            M[r] += p
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if M[r * cols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(cols):
                tmp = M[piv * cols + c]
                M[piv * cols + c] = M[rank * cols + c]
                M[rank * cols + c] = tmp
        inv = _inv_mod(M[rank * cols + col], p)
        for c in range(cols):
            M[rank * cols + c] = (M[rank * cols + c] * inv) % p
        for r in range(rows):
            if r != rank and M[r * cols + col] != 0:
                f = M[r * cols + col]
                for c in range(cols):
                    M[r * cols + c] = (M[r * cols + c] - f * M[rank * cols + c]) % p
                    if M[r * cols + c] < 0:
                        M[r * cols + c] += p
        rank += 1
    return rank


def rref_mod_p(const long long[:] flat, int rows, int cols, long long p):
    cdef long long *M = <long long *> malloc(max(rows * cols, 1) * sizeof(long long))
    cdef int i, rank
    if M == NULL:
        raise MemoryError()
    try:
        for i in range(rows * cols):
            M[i] = flat[i]
        rank = _rref(M, rows, cols, p)
        out = [[M[r * cols + c] for c in range(cols)] for r in range(rank)]
    finally:
        free(M)
    return out, rank


def rank_mod_p(const long long[:] flat, int rows, int cols, long long p):
    cdef long long *M = <long long *> malloc(max(rows * cols, 1) * sizeof(long long))
    cdef int i, rank
    if M == NULL:
        raise MemoryError()
    for i in range(rows * cols):
        M[i] = flat[i]
    rank = _rref(M, rows, cols, p)
    free(M)
    return rank


def closed_walk_traces(const long long[:] indptr, const long long[:] indices, int n, int lmax):
    cdef long long *cur = <long long *> calloc(max(n, 1), sizeof(long long))
    cdef long long *nxt = <long long *> calloc(max(n, 1), sizeof(long long))
    cdef long long *tr = <long long *> calloc(max(lmax, 1), sizeof(long long))
    cdef long long *tmp
    cdef long long w
    cdef Py_ssize_t s, u, e, L, v
    if cur == NULL or nxt == NULL or tr == NULL:
        free(cur); free(nxt); free(tr)
        raise MemoryError()
    with nogil:
        for s in range(n):
            for v in range(n):
                cur[v] = 0
            cur[s] = 1
            for L in range(lmax):
                for v in range(n):
                    nxt[v] = 0
                for u in range(n):
                    w = cur[u]
                    if w == 0:
                        continue
                    for e in range(indptr[u], indptr[u + 1]):
                        nxt[indices[e]] += w
                tr[L] += nxt[s]
                tmp = cur
                cur = nxt
                nxt = tmp
    out = [tr[L] for L in range(lmax)]
    free(cur); free(nxt); free(tr)
    return out
