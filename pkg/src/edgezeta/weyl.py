"""Finite crystallographic root systems and their Weyl groups.

Group elements are stored as permutations of the full root list, so length,
products and conjugation of simple reflections are linear scans over the
roots. Simple roots carry the node labels of the usual Dynkin diagrams
(Bourbaki numbering, which is also the GAP3/CHEVIE numbering for E, F, G).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

FAMILIES = "ABCDEFG"

_POSITIVE_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def classical_positive_count(family: str, rank: int) -> int:
    return _POSITIVE_COUNTS[family](rank)


def _check_supported(family: str, rank: int) -> None:
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)
    if not ok:
        raise ValueError(f"unsupported root system {family}{rank}")


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """``A[i][j] = <alpha_i^vee, alpha_j>`` with 0-based node indices."""
    _check_supported(family, rank)
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if family in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if family == "B":
            # alpha_n short
            bond(n - 2, n - 1, -1, -2)
        elif family == "C":
            # alpha_n long
            bond(n - 2, n - 1, -2, -1)
    elif family == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif family == "E":
        # 1-3-4-5-6-7-8 chain with 2 attached to 4
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -1, -2)
        bond(2, 3)
    elif family == "G":
        bond(0, 1, -1, -3)
    return A


class RootSystem:
    """Root data for one irreducible finite crystallographic type.

    ``roots`` lists positive roots (by height, then coordinates) followed by
    their negatives in the same order; coordinates are in the simple-root
    basis. ``label_map`` sends node labels 1..n to simple-root indices.
    """

    def __init__(self, family: str, rank: int):
        family = family.upper()
        self.family = family
        self.rank = rank
        self.cartan = cartan_matrix(family, rank)
        simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(rank):
                    gamma = self._reflect(i, beta)
                    if gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        positives = sorted((r for r in found if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))
        self.n_pos = len(positives)
        self.roots: list[tuple[int, ...]] = positives + [tuple(-c for c in r) for r in positives]
        self.index = {r: k for k, r in enumerate(self.roots)}
        self.simple_indices = [self.index[s] for s in simple]
        self.labels = list(range(1, rank + 1))
        self.label_map = {lab: self.simple_indices[lab - 1] for lab in self.labels}
        self._simple_perms = [self._reflection_perm(i) for i in range(rank)]
        self.identity = WeylElement(self, tuple(range(len(self.roots))))

    def __repr__(self):
        return f"RootSystem({self.family}{self.rank})"

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def _reflect(self, i: int, beta: Sequence[int]) -> tuple[int, ...]:
        pairing = sum(beta[j] * self.cartan[i][j] for j in range(self.rank))
        out = list(beta)
        out[i] -= pairing
        return tuple(out)

    def _reflection_perm(self, i: int) -> tuple[int, ...]:
        return tuple(self.index[self._reflect(i, r)] for r in self.roots)

    def negate_index(self, k: int) -> int:
        return k + self.n_pos if k < self.n_pos else k - self.n_pos

    def is_positive_index(self, k: int) -> bool:
        return k < self.n_pos

    def simple_reflection(self, label: int) -> WeylElement:
        return WeylElement(self, self._simple_perms[label - 1])

    def word(self, labels: Iterable[int]) -> WeylElement:
        w = self.identity
        for lab in labels:
            w = w * self.simple_reflection(lab)
        return w

    def parabolic_positive_roots(self, J: Iterable[int]) -> list[int]:
        """Indices of positive roots supported on the simple roots labelled by J."""
        Jset = {lab - 1 for lab in J}
        return [
            k
            for k in range(self.n_pos)
            if all(c == 0 or i in Jset for i, c in enumerate(self.roots[k]))
        ]

    def longest_parabolic(self, J: Iterable[int]) -> WeylElement:
        return _longest_cached(self, frozenset(J))

    @property
    def longest(self) -> WeylElement:
        return self.longest_parabolic(self.labels)

    def opposition(self) -> dict[int, int]:
        w0 = self.longest
        return {s: conjugated_simple(w0, s) for s in self.labels}


class WeylElement:
    """Weyl group element acting on root indices."""

    __slots__ = ("rs", "perm", "_length")

    def __init__(self, rs: RootSystem, perm: tuple[int, ...]):
        self.rs = rs
        self.perm = perm
        self._length = None

    def __mul__(self, other: WeylElement) -> WeylElement:
        if other.rs is not self.rs:
            raise ValueError("elements of different root systems")
        p = self.perm
        return WeylElement(self.rs, tuple(p[k] for k in other.perm))

    def __eq__(self, other):
        return isinstance(other, WeylElement) and other.rs is self.rs and other.perm == self.perm

    def __hash__(self):
        return hash(self.perm)

    def __pow__(self, k: int) -> WeylElement:
        if k < 0:
            return self.inverse() ** (-k)
        out = self.rs.identity
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for k, v in enumerate(self.perm):
            inv[v] = k
        return WeylElement(self.rs, tuple(inv))

    def length(self) -> int:
        if self._length is None:
            n_pos = self.rs.n_pos
            self._length = sum(1 for k in range(n_pos) if self.perm[k] >= n_pos)
        return self._length

    def is_identity(self) -> bool:
        return self.perm == self.rs.identity.perm

    def apply(self, root: Sequence[int]) -> tuple[int, ...]:
        return self.rs.roots[self.perm[self.rs.index[tuple(root)]]]

    def simple_images(self) -> list[tuple[int, ...]]:
        """One-line serialization: images of the simple roots."""
        return [self.rs.roots[self.perm[k]] for k in self.rs.simple_indices]

    def __repr__(self):
        imgs = " ".join("".join(str(c) if c >= 0 else f"({c})" for c in r) for r in self.simple_images())
        return f"<{self.rs.name} element len={self.length()} [{imgs}]>"


def build_root_system(family: str, rank: int) -> RootSystem:
    return _build_cached(family.upper(), rank)


@lru_cache(maxsize=None)
def _build_cached(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def multiply(w1: WeylElement, w2: WeylElement) -> WeylElement:
    return w1 * w2


def length(w: WeylElement) -> int:
    return w.length()


def invert(w: WeylElement) -> WeylElement:
    return w.inverse()


@lru_cache(maxsize=None)
def _longest_cached(rs: RootSystem, J: frozenset) -> WeylElement:
    for lab in J:
        if lab not in rs.label_map:
            raise ValueError(f"unknown node label {lab}")
    w = rs.identity
    n_pos = rs.n_pos
    # greedy ascent: right-multiply by s whenever w(alpha_s) is still positive
    while True:
        for lab in sorted(J):
            if w.perm[rs.label_map[lab]] < n_pos:
                w = w * rs.simple_reflection(lab)
                break
        else:
            return w


def longest_parabolic(rs: RootSystem, J: Iterable[int]) -> WeylElement:
    return rs.longest_parabolic(J)


def conjugated_simple(w: WeylElement, s: int) -> int:
    """Label t with ``w s w^-1 = s_t``."""
    rs = w.rs
    img = w.perm[rs.label_map[s]]
    if img >= rs.n_pos:
        img = rs.negate_index(img)
    for lab, k in rs.label_map.items():
        if k == img:
            return lab
    raise ValueError("not a simple conjugate")
