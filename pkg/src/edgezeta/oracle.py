"""Brute-force buildings of GL_n(F_p) and Sp_2n(F_p).

Vertices of the GL_n building are the proper nonzero subspaces of F_p^n;
those of the Sp_2n building are the nonzero totally isotropic subspaces of
F_p^2n. Two vertices are adjacent when one contains the other. The geodesic
edge graph X2 has the directed edges as vertices, with (A -> V) -> (V -> C)
whenever A and C are opposite in the link of V.

The symplectic basis is ordered e_1..e_n, f_n..f_1 with <e_i, f_i> = 1, so
the Gram matrix is antidiagonal: +1 in the upper half, -1 in the lower half.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import prod

from . import kernels

SUPPORTED = {
    ("A", 3): (2, 3),
    ("A", 4): (2, 3),
    ("C", 2): (2, 3),
    ("C", 3): (2,),
}


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def _require_prime(q: int) -> None:
    if not _is_prime(q):
        raise ValueError(f"prime fields only (got q={q})")


@dataclass(frozen=True)
class Subspace:
    """Row space of ``basis`` (canonical RREF rows) inside F_p^ambient."""

    basis: tuple[tuple[int, ...], ...]
    p: int
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flat(self) -> list[int]:
        return [x for row in self.basis for x in row]

    def __repr__(self):
        rows = ",".join("".join(map(str, r)) for r in self.basis)
        return f"<{self.dim}:{rows}>"


def subspace_from_rows(rows, p: int, ambient: int) -> Subspace:
    rows = [list(r) for r in rows]
    flat = [x for r in rows for x in r]
    red, _ = kernels.rref_mod_p(flat, len(rows), ambient, p)
    return Subspace(tuple(tuple(int(x) for x in r) for r in red), p, ambient)


def _rref_matrices(n: int, k: int, p: int):
    """Every k x n RREF matrix of rank k over F_p, each exactly once."""
    for pivots in combinations(range(n), k):
        free = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for vals in product(range(p), repeat=len(free)):
            M = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                M[r][c] = 1
            for (r, c), v in zip(free, vals):
                M[r][c] = v
            yield tuple(tuple(row) for row in M)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = prod(q ** (n - i) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def isotropic_count(n: int, k: int, q: int) -> int:
    """Number of k-dim totally isotropic subspaces of F_q^2n."""
    num = prod(q ** (2 * (n - i)) - 1 for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    return num // den


def enumerate_subspaces(n: int, q: int, dim: int) -> list[Subspace]:
    _require_prime(q)
    if not 0 <= dim <= n:
        raise ValueError("dimension out of range")
    return [Subspace(M, q, n) for M in _rref_matrices(n, dim, q)]


def symplectic_form(x, y, p: int) -> int:
    N = len(x)
    n = N // 2
    s = 0
    for r in range(N):
        if x[r] and y[N - 1 - r]:
            s += x[r] * y[N - 1 - r] if r < n else -x[r] * y[N - 1 - r]
    return s % p


def is_isotropic(V: Subspace) -> bool:
    return all(symplectic_form(a, b, V.p) == 0 for a, b in combinations(V.basis, 2))


def enumerate_isotropic(n2: int, q: int, dim: int) -> list[Subspace]:
    """Totally isotropic subspaces of F_q^n2 (n2 even) for the standard form."""
    _require_prime(q)
    if n2 % 2 or not 0 <= dim <= n2 // 2:
        raise ValueError("need even ambient dimension and dim <= n2/2")
    return [V for V in enumerate_subspaces(n2, q, dim) if is_isotropic(V)]


# ---------------------------------------------------------------------------
# geodesic condition


def _rank(rows, cols: int, p: int) -> int:
    if not rows:
        return 0
    return kernels.rank_mod_p([x for r in rows for x in r], len(rows), cols, p)


def _contains(big: Subspace, small: Subspace) -> bool:
    return small.dim < big.dim and _rank(big.basis + small.basis, big.ambient, big.p) == big.dim


def geodesic_adjacent(family: str, x_minus: Subspace, x: Subspace, x_plus: Subspace) -> bool:
    """True iff x_minus and x_plus are opposite in the link of x."""
    A, V, C = x_minus, x, x_plus
    n, p = V.ambient, V.p
    below_a, below_c = A.dim < V.dim, C.dim < V.dim
    for W, below in ((A, below_a), (C, below_c)):
        if not (_contains(V, W) if below else _contains(W, V)):
            raise ValueError("geodesic_adjacent needs two edges through x")
    if below_a != below_c:
        return False
    if below_a:
        return A.dim + C.dim == V.dim and _rank(A.basis + C.basis, n, p) == V.dim
    # both above: A + C has dimension dim A + dim C - dim V iff A meet C = V
    if _rank(A.basis + C.basis, n, p) != A.dim + C.dim - V.dim:
        return False
    if family == "A":
        return A.dim + C.dim - V.dim == n
    if A.dim != C.dim:
        return False
    pairing = [[symplectic_form(a, c, p) for c in C.basis] for a in A.basis]
    return _rank(pairing, C.dim, p) == A.dim - V.dim


# ---------------------------------------------------------------------------
# skeleton and X2


@dataclass
class BuildingSkeleton:
    family: str
    n: int
    q: int
    vertices: list[Subspace]
    edges: list[tuple[int, int]]  # (smaller, larger) vertex indices
    x2_vertices: list[tuple[int, int]]  # directed edges (src, dst)
    x2_indptr: list[int] = field(repr=False)
    x2_indices: list[int] = field(repr=False)

    def vertex_type(self, v: int) -> int:
        return self.vertices[v].dim

    def x2_type(self, e: int) -> tuple[int, int]:
        a, b = self.x2_vertices[e]
        return (self.vertex_type(a), self.vertex_type(b))

    def x2_successors(self, e: int) -> list[int]:
        return self.x2_indices[self.x2_indptr[e] : self.x2_indptr[e + 1]]

    @property
    def x2_edge_count(self) -> int:
        return len(self.x2_indices)

    def dump(self) -> str:
        """Plain adjacency list: typed vertex labels, then ``src dst`` lines."""
        out = [f"# X2 of {self.family}{self.n} over F_{self.q}: {len(self.x2_vertices)} vertices"]
        for e, (a, b) in enumerate(self.x2_vertices):
            r, s = self.x2_type(e)
            out.append(f"# {e} type=({r},{s}) {self.vertices[a]!r}->{self.vertices[b]!r}")
        for e in range(len(self.x2_vertices)):
            out.extend(f"{e} {f}" for f in self.x2_successors(e))
        return "\n".join(out) + "\n"


def expected_vertex_count(family: str, n: int, q: int) -> int:
    if family == "A":
        return sum(gaussian_binomial(n, k, q) for k in range(1, n))
    return sum(isotropic_count(n, k, q) for k in range(1, n + 1))


def build_skeleton(family: str, n: int, q: int) -> tuple[list[Subspace], list[tuple[int, int]]]:
    _require_prime(q)
    if family == "A":
        verts = [V for k in range(1, n) for V in enumerate_subspaces(n, q, k)]
    else:
        verts = [V for k in range(1, n + 1) for V in enumerate_isotropic(2 * n, q, k)]
    index = {V.basis: i for i, V in enumerate(verts)}
    edges = []
    for i, V in enumerate(verts):
        # subspaces of V: RREF coefficient matrices applied to V's basis
        for k in range(1, V.dim):
            for coeffs in _rref_matrices(V.dim, k, q):
                rows = [
                    [sum(c * b[col] for c, b in zip(row, V.basis)) % q for col in range(V.ambient)]
                    for row in coeffs
                ]
                W = subspace_from_rows(rows, q, V.ambient)
                edges.append((index[W.basis], i))
    edges.sort()
    return verts, edges


def build_x2(family: str, n: int, q: int) -> BuildingSkeleton:
    """Skeleton and geodesic edge graph. ``n`` is the GL_n size for family A
    and half the ambient dimension (Sp_2n) for family C."""
    family = family.upper()
    _require_prime(q)
    if q not in SUPPORTED.get((family, n), ()):
        raise ValueError(f"size out of supported range: {family} n={n} q={q}")
    verts, edges = build_skeleton(family, n, q)
    below: list[list[int]] = [[] for _ in verts]
    above: list[list[int]] = [[] for _ in verts]
    for a, b in edges:
        below[b].append(a)
        above[a].append(b)
    x2 = sorted([(a, b) for a, b in edges] + [(b, a) for a, b in edges])
    x2_index = {e: i for i, e in enumerate(x2)}
    succ: list[list[int]] = [[] for _ in x2]
    for v, V in enumerate(verts):
        nbrs = below[v] + above[v]
        for a in nbrs:
            src = x2_index[(a, v)]
            for c in nbrs:
                if c != a and geodesic_adjacent(family, verts[a], V, verts[c]):
                    succ[src].append(x2_index[(v, c)])
    indptr = [0]
    indices: list[int] = []
    for lst in succ:
        indices.extend(sorted(lst))
        indptr.append(len(indices))
    return BuildingSkeleton(family, n, q, verts, edges, x2, indptr, indices)


def restrict_x2(sk: BuildingSkeleton, types) -> tuple[list[int], list[int], int]:
    """CSR of the X2 subgraph on directed edges whose type pair lies in ``types``."""
    keep = [e for e in range(len(sk.x2_vertices)) if sk.x2_type(e) in types]
    new = {e: i for i, e in enumerate(keep)}
    indptr, indices = [0], []
    for e in keep:
        indices.extend(new[f] for f in sk.x2_successors(e) if f in new)
        indptr.append(len(indices))
    return indptr, indices, len(keep)


def closed_walk_counts(sk: BuildingSkeleton, lmax: int, types=None) -> list[int]:
    """``[N(1), ..., N(lmax)]`` with N(L) = trace of the L-th power of X2,
    optionally restricted to the directed edges with type pair in ``types``."""
    if lmax > 20:
        raise ValueError("lmax must be at most 20")
    if types is None:
        return kernels.closed_walk_traces(sk.x2_indptr, sk.x2_indices, len(sk.x2_vertices), lmax)
    indptr, indices, n = restrict_x2(sk, set(types))
    return kernels.closed_walk_traces(indptr, indices, n, lmax)
