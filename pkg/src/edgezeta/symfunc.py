"""Partition combinatorics for the type A and type C spectral data.

Partitions are plain tuples of positive ints in weakly decreasing order;
a bipartition is a pair ``(lam, mu)`` of such tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Iterator, Sequence

from .exactmath import LaurentPoly, poly_divexact

Partition = tuple[int, ...]
Bipartition = tuple[Partition, Partition]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize: drop zeros, check weak decrease."""
    p = tuple(int(x) for x in parts if x)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not a partition: {p}")
    return p


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def bipartitions(n: int) -> list[Bipartition]:
    """All (lam, mu) with |lam| + |mu| = n, sorted lexicographically."""
    out = []
    for a in range(n + 1):
        for lam in partitions(a):
            for mu in partitions(n - a):
                out.append((lam, mu))
    return sorted(out)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def kappa(lam: Sequence[int]) -> int:
    """Content sum: sum C(lam_i, 2) - sum C(lam'_j, 2)."""
    lam = partition(lam)
    return sum(comb(x, 2) for x in lam) - sum(comb(x, 2) for x in conjugate(lam))


def n_statistic(lam: Sequence[int]) -> int:
    """``sum (i-1) lam_i``."""
    return sum(i * x for i, x in enumerate(partition(lam)))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    lam, mu = partition(lam), partition(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_lengths(lam: Sequence[int]) -> list[int]:
    lam = partition(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def sym_dimension(lam: Sequence[int]) -> int:
    """Dimension of the Specht module (hook length formula)."""
    lam = partition(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


# ---------------------------------------------------------------------------
# Kostka numbers


def kostka(lam: Sequence[int], content: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape ``lam`` and the given content,
    counted by filling cells row by row."""
    lam = partition(lam)
    content = [int(c) for c in content]
    if any(c < 0 for c in content):
        raise ValueError("content must be non-negative")
    if sum(lam) != sum(content):
        raise ValueError("shape and content sizes differ")
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    filling: dict[tuple[int, int], int] = {}
    remaining = list(content)
    r = len(content)

    def count(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 0
        if j > 0:
            lo = filling[(i, j - 1)]
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        # a cell in row i holds a value >= i (0-based), so rows beyond r are impossible
        total = 0
        for v in range(lo, r):
            if remaining[v] == 0:
                continue
            # cells below in this column need strictly larger values
            below = sum(1 for ii in range(i + 1, len(lam)) if lam[ii] > j)
            if v + below >= r:
                break
            remaining[v] -= 1
            filling[(i, j)] = v
            total += count(pos + 1)
            remaining[v] += 1
        filling.pop((i, j), None)
        return total

    return count(0)


def is_horizontal_strip(nu: Sequence[int], mu: Sequence[int]) -> bool:
    nu, mu = partition(nu), partition(mu)
    if len(mu) > len(nu):
        return False
    mu_pad = list(mu) + [0] * (len(nu) - len(mu))
    for i in range(len(nu)):
        if nu[i] < mu_pad[i]:
            return False
        if i + 1 < len(nu) and nu[i + 1] > mu_pad[i]:
            return False
    return True


def pieri_coefficient(nu: Sequence[int], mu: Sequence[int], k: int) -> int:
    """LR coefficient ``c^nu_{mu,(k)}``: 1 iff nu/mu is a horizontal k-strip."""
    nu, mu = partition(nu), partition(mu)
    if sum(nu) != sum(mu) + k:
        raise ValueError("sizes do not match")
    return 1 if is_horizontal_strip(nu, mu) else 0


def _strip_extensions(mu: Partition, k: int) -> Iterator[Partition]:
    """Partitions nu with nu/mu a horizontal k-strip."""
    rows = list(mu) + [0]

    def rec(i: int, left: int, acc: list[int]):
        if i == len(rows):
            if left == 0:
                yield partition(acc)
            return
        cap = left if i == 0 else min(left, rows[i - 1] - rows[i])
        for add in range(cap, -1, -1):
            yield from rec(i + 1, left - add, acc + [rows[i] + add])

    yield from rec(0, k, [])


def kostka_pieri(lam: Sequence[int], content: Sequence[int]) -> int:
    """Kostka number by iterating Pieri's rule over the content entries."""
    lam = partition(lam)
    if sum(lam) != sum(content):
        raise ValueError("shape and content sizes differ")
    layer = {(): 1}
    for k in content:
        nxt: dict[Partition, int] = {}
        for mu, mult in layer.items():
            for nu in _strip_extensions(mu, k):
                if len(nu) <= len(lam) and all(nu[i] <= lam[i] for i in range(len(nu))):
                    nxt[nu] = nxt.get(nu, 0) + mult * pieri_coefficient(nu, mu, k)
        layer = nxt
    return layer.get(lam, 0)


@lru_cache(maxsize=None)
def kostka_cached(lam: Partition, content: tuple[int, ...]) -> int:
    # Kostka numbers do not depend on the order of the content
    return kostka(lam, tuple(sorted((c for c in content if c), reverse=True)))


# ---------------------------------------------------------------------------
# degree polynomials


def q_hook_dimension_A(lam: Sequence[int]) -> LaurentPoly:
    """Unipotent degree of GL_n: q^{n(lam)} prod(q^i - 1) / prod_hooks(q^h - 1)."""
    lam = partition(lam)
    n = sum(lam)
    q = LaurentPoly.q
    num = q(n_statistic(lam))
    for i in range(1, n + 1):
        num = num * (q(i) - 1)
    den = LaurentPoly.const(1)
    for h in hook_lengths(lam):
        den = den * (q(h) - 1)
    return poly_divexact(num, den)


@dataclass(frozen=True)
class Symbol:
    """Defect-1 symbol: X has k entries, Y has k - 1, both strictly decreasing."""

    X: tuple[int, ...]
    Y: tuple[int, ...]


def symbol_of(bp: Bipartition, k: int | None = None) -> Symbol:
    lam, mu = partition(bp[0]), partition(bp[1])
    kmin = max(len(lam), len(mu) + 1)
    if k is None:
        k = kmin
    if k < kmin:
        raise ValueError(f"k={k} too small for {bp}; need k >= {kmin}")
    lp = list(lam) + [0] * (k - len(lam))
    mp = list(mu) + [0] * (k - 1 - len(mu))
    X = tuple(lp[i - 1] - i + k for i in range(1, k + 1))
    Y = tuple(mp[j - 1] - j + (k - 1) for j in range(1, k))
    return Symbol(X, Y)


def hooks(S: Symbol) -> list[tuple[int, int]]:
    out = []
    for row in (S.X, S.Y):
        rs = set(row)
        for c in row:
            out.extend((b, c) for b in range(c) if b not in rs)
    return sorted(out)


def cohooks(S: Symbol) -> list[tuple[int, int]]:
    out = []
    for row, other in ((S.X, S.Y), (S.Y, S.X)):
        os_ = set(other)
        for c in row:
            out.extend((b, c) for b in range(c) if b not in os_)
    return sorted(out)


def a_stat(S: Symbol) -> int:
    entries = list(S.X) + list(S.Y)
    N = len(entries)
    total = sum(min(entries[x], entries[y]) for x in range(N) for y in range(x + 1, N))
    i = 1
    while N - 2 * i >= 2:
        total -= comb(N - 2 * i, 2)
        i += 1
    return total


def b_stat(S: Symbol) -> int:
    if S.X == S.Y:
        return 0
    return (len(S.X) + len(S.Y) - 1) // 2 - len(set(S.X) & set(S.Y))


def generic_degree_C(bp: Bipartition, k: int | None = None) -> LaurentPoly:
    """Unipotent degree of Sp_2n(q) attached to (lam, mu), hook-cohook formula."""
    lam, mu = partition(bp[0]), partition(bp[1])
    n = sum(lam) + sum(mu)
    S = symbol_of((lam, mu), k)
    q = LaurentPoly.q
    num = q(a_stat(S))
    for i in range(1, n + 1):
        num = num * (q(2 * i) - 1)
    den = LaurentPoly.const(2 ** b_stat(S))
    for b, c in hooks(S):
        den = den * (q(c - b) - 1)
    for b, c in cohooks(S):
        den = den * (q(c - b) + 1)
    return poly_divexact(num, den)


def wn_dimension(bp: Bipartition) -> int:
    """Degree of the hyperoctahedral-group irreducible labelled by (lam, mu)."""
    lam, mu = partition(bp[0]), partition(bp[1])
    n = sum(lam) + sum(mu)
    return comb(n, sum(mu)) * sym_dimension(lam) * sym_dimension(mu)
