"""Luo's decomposition of ``w'_0 w_S`` along a type orbit.

Notation along an orbit with labels t_i:
``w_i`` is the longest element of W_{S - {t_i}} and ``w'_i`` that of
W_{S - {t_i, t_{i+1}}}. The half-period m is the number of segments
``w'_{k-1} w_k`` whose lengths add up to ``l(w'_0 w_S)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .typeorbits import TypeOrbit
from .weyl import RootSystem, WeylElement, conjugated_simple


@dataclass(frozen=True)
class LuoResult:
    orbit: TypeOrbit
    m: int
    segment_lengths: tuple[int, ...]
    rde_word: WeylElement

    @property
    def c(self) -> int:
        return self.orbit.c

    @property
    def d(self) -> int:
        return 2 * self.m // self.orbit.c


def _w(rs: RootSystem, orbit: TypeOrbit, i: int) -> WeylElement:
    return rs.longest_parabolic(set(rs.labels) - {orbit.label(i)})


def _wp(rs: RootSystem, orbit: TypeOrbit, i: int) -> WeylElement:
    return rs.longest_parabolic(set(rs.labels) - {orbit.label(i), orbit.label(i + 1)})


def segment(rs: RootSystem, orbit: TypeOrbit, k: int) -> WeylElement:
    """``w'_{k-1} w_k``."""
    return _wp(rs, orbit, k - 1) * _w(rs, orbit, k)


def rde_word(rs: RootSystem, orbit: TypeOrbit) -> WeylElement:
    """``u = (w'_0 w_1)(w'_1 w_2)...(w'_{c-1} w_c)`` over one revolution."""
    u = rs.identity
    for k in range(1, orbit.c + 1):
        u = u * segment(rs, orbit, k)
    return u


def half_period(rs: RootSystem, orbit: TypeOrbit) -> LuoResult:
    wS = rs.longest
    target = (_wp(rs, orbit, 0) * wS).length()
    lengths = []
    running = 0
    k = 0
    while running < target:
        k += 1
        seg = segment(rs, orbit, k).length()
        lengths.append(seg)
        running += seg
    if running != target:
        raise ArithmeticError("length additivity violated")
    m = k

    prod = rs.identity
    for j in range(1, m + 1):
        prod = prod * segment(rs, orbit, j)
    if prod != _wp(rs, orbit, 0) * wS:
        raise ArithmeticError("product identity for w'_0 w_S fails")
    for i in range(orbit.c):
        if conjugated_simple(wS, orbit.label(i)) != orbit.label(i + m):
            raise ArithmeticError("w_S does not shift the orbit labels by m")
    if (2 * m) % orbit.c:
        raise ArithmeticError("orbit length does not divide 2m")
    return LuoResult(orbit, m, tuple(lengths), rde_word(rs, orbit))


def verify_u_sequence(rs: RootSystem, orbit: TypeOrbit) -> int:
    """Second route to m: iterate ``u_{n+1} = u_n (w'_n w_{n+1})`` from
    ``u_0 = w_S w'_0`` until the identity; must agree with :func:`half_period`."""
    u = rs.longest * _wp(rs, orbit, 0)
    n = 0
    bound = 2 * rs.n_pos + 2 * orbit.c + 2
    while not u.is_identity():
        u = u * segment(rs, orbit, n + 1)
        n += 1
        if n > bound:
            raise ArithmeticError("u-sequence never reaches the identity")
    m = half_period(rs, orbit).m
    if n != m:
        raise ArithmeticError(f"u-sequence gives m={n}, length criterion gives m={m}")
    return n
