"""Pure-Python versions of the oracle's hot loops.

Matrices are passed flat (row-major) with explicit shape, matching the
compiled module's signatures so the two are interchangeable.
"""

from __future__ import annotations


def rref_mod_p(flat, rows: int, cols: int, p: int):
    """Reduced row echelon form over F_p. Returns ``(rows_list, rank)``;
    ``rows_list`` holds only the nonzero rows."""
    M = [[int(flat[r * cols + c]) % p for c in range(cols)] for r in range(rows)]
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][col], p - 2, p)
        M[rank] = [(x * inv) % p for x in M[rank]]
        for r in range(rows):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [(a - f * b) % p for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == rows:
            break
    return M[:rank], rank


def rank_mod_p(flat, rows: int, cols: int, p: int) -> int:
    return rref_mod_p(flat, rows, cols, p)[1]


def closed_walk_traces(indptr, indices, n: int, lmax: int) -> list[int]:
    """``[trace(A^L) for L in 1..lmax]`` for the 0/1 matrix in CSR form,
    propagating one sparse walk vector per source vertex."""
    out = [0] * lmax
    for s in range(n):
        cur = {s: 1}
        for L in range(lmax):
            nxt: dict[int, int] = {}
            for u, w in cur.items():
                for e in range(indptr[u], indptr[u + 1]):
                    v = indices[e]
                    nxt[v] = nxt.get(v, 0) + w
            out[L] += nxt.get(s, 0)
            cur = nxt
    return out
