"""Orbits of the next-type map on ordered pairs of distinct node labels."""

from __future__ import annotations

from dataclasses import dataclass

from .weyl import RootSystem, conjugated_simple

Pair = tuple[int, int]


@dataclass(frozen=True)
class TypeOrbit:
    """``cycle = [t0, t1, ..., tc]`` with ``tc == t0``; pairs are consecutive entries."""

    cycle: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.cycle) - 1

    @property
    def pairs(self) -> list[Pair]:
        return [(self.cycle[i], self.cycle[i + 1]) for i in range(self.c)]

    @property
    def start(self) -> Pair:
        return (self.cycle[0], self.cycle[1])

    def label(self, i: int) -> int:
        """``t_i`` for any integer i (the label sequence has period c)."""
        return self.cycle[i % self.c]

    def text(self, arrow: str = " → ") -> str:
        return arrow.join(str(t) for t in self.cycle)

    def same_cycle(self, labels) -> bool:
        """True if ``labels`` (t0..tc, closed) is a rotation of this orbit."""
        labels = list(labels)
        if labels[0] != labels[-1] or len(labels) != len(self.cycle):
            return False
        ours = list(self.cycle[:-1])
        theirs = labels[:-1]
        return any(ours[k:] + ours[:k] == theirs for k in range(len(ours)))


def next_type(rs: RootSystem, pair: Pair) -> Pair:
    r, s = pair
    if r == s:
        raise ValueError("next_type needs distinct labels")
    w = rs.longest_parabolic(set(rs.labels) - {s})
    return (s, conjugated_simple(w, r))


def prev_type(rs: RootSystem, pair: Pair) -> Pair:
    r, s = pair
    if r == s:
        raise ValueError("prev_type needs distinct labels")
    w = rs.longest_parabolic(set(rs.labels) - {r})
    return (conjugated_simple(w, s), r)


def orbit_of(rs: RootSystem, pair: Pair) -> TypeOrbit:
    """Orbit through ``pair``, listed starting at ``pair``."""
    seq = [pair[0], pair[1]]
    cur = pair
    while True:
        cur = next_type(rs, cur)
        if cur == pair:
            break
        seq.append(cur[1])
        if len(seq) > rs.rank * rs.rank + 2:
            raise RuntimeError("next_type did not cycle")
    return TypeOrbit(tuple(seq))


def enumerate_orbits(rs: RootSystem) -> list[TypeOrbit]:
    """All orbits, each starting at its smallest pair, sorted by that pair."""
    seen: set[Pair] = set()
    out = []
    for r in rs.labels:
        for s in rs.labels:
            if r == s or (r, s) in seen:
                continue
            orb = orbit_of(rs, (r, s))
            seen.update(orb.pairs)
            out.append(orb)
    return out
