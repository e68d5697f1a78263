"""Closed-form edge zeta spectral data for the GL_n and Sp_2n buildings.

Each type orbit C contributes a factor

    prod_chi prod_{zeta^d = 1} (1 - zeta q^(E_chi/d) u^c) ^ (m_chi(zeta) * deg_chi)

to 1/Z, where c = |C|, d = 2m/c and E_chi = f_chi - 2 l(w_I). This module
assembles the lines (chi, E_chi, n_chi, deg_chi, m_chi) for types A and C,
predicts closed-walk counts from them and renders the factored form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from .exactmath import (
    Eigenvalue,
    LaurentPoly,
    eigenvalue_power_sum,
    format_factored,
    format_poly,
    parse_poly,
    poly_eval,
)
from .luo import half_period
from .symfunc import (
    Bipartition,
    Partition,
    bipartitions,
    generic_degree_C,
    kappa,
    kostka_cached,
    partitions,
    q_hook_dimension_A,
)
from .typeorbits import TypeOrbit, orbit_of, enumerate_orbits
from .weyl import build_root_system

Label = Union[Partition, Bipartition]


@dataclass(frozen=True)
class SpectralLine:
    label: Label
    eigenvalue_base: Eigenvalue
    n_total: int
    degree: LaurentPoly
    splits: tuple[tuple[int, int], ...]  # sorted (unity_index, multiplicity), zeros dropped

    @property
    def d(self) -> int:
        return self.eigenvalue_base.root_order

    @property
    def exponent(self) -> int:
        """E with eigenvalue ``zeta * q^(E/d)``."""
        return self.eigenvalue_base.q_exp_num

    def split_map(self) -> dict[int, int]:
        return dict(self.splits)

    def eigenvalues(self):
        """``(Eigenvalue, multiplicity polynomial)`` pairs, one per root of unity."""
        d, E = self.d, self.exponent
        return [(Eigenvalue(d, k, E), self.degree * m) for k, m in self.splits]

    def check(self) -> None:
        sm = self.split_map()
        if sum(sm.values()) != self.n_total:
            raise AssertionError(f"{self.label}: splits do not sum to n_chi")
        for k, m in sm.items():
            if sm.get((-k) % self.d, 0) != m:
                raise AssertionError(f"{self.label}: splits not conjugation symmetric")
        # the d-th power of every eigenvalue must be an integral power of q
        for k, _ in self.splits:
            Eigenvalue(self.d, k, self.exponent).q_power_of_dth()


@dataclass(frozen=True)
class ZetaFactor:
    family: str
    rank: int
    params: tuple[int, int, int]
    orbit: TypeOrbit
    m: int
    lines: tuple[SpectralLine, ...]

    @property
    def c(self) -> int:
        return self.orbit.c

    @property
    def d(self) -> int:
        return 2 * self.m // self.c


def _splits(d: dict[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _orbit_and_m(family: str, rank: int, pair) -> tuple[TypeOrbit, int]:
    rs = build_root_system(family, rank)
    orbit = orbit_of(rs, pair)
    return orbit, half_period(rs, orbit).m


def balanced_split(K: int) -> dict[int, int]:
    """Split n_chi = K over (1, omega, omega^2) as evenly as possible.

    Solves m1 + 2*mw = K, m1 - mw = K (mod 3), |m1 - mw| <= 1 and checks the
    solution is unique.
    """
    sols = [
        (m1, mw)
        for mw in range(K // 2 + 1)
        for m1 in [K - 2 * mw]
        if (m1 - mw - K) % 3 == 0 and abs(m1 - mw) <= 1
    ]
    if len(sols) != 1:
        raise ArithmeticError(f"balanced split for K={K} not unique: {sols}")
    m1, mw = sols[0]
    return {0: m1, 1: mw, 2: mw}


def typeA_component(n: int, i: int, j: int, k: int) -> ZetaFactor:
    """Factor of the GL_n building for the orbit through types (i, i+j)."""
    if min(i, j, k) < 1 or i + j + k != n:
        raise ValueError(f"invalid composition ({i},{j},{k}) of {n}")
    orbit, m = _orbit_and_m("A", n - 1, (i, i + j))
    balanced = i == j == k
    c, d = orbit.c, 2 * m // orbit.c
    if (c, d) != ((2, 3) if balanced else (6, 1)):
        raise AssertionError(f"unexpected (c,d)=({c},{d}) for ({i},{j},{k})")
    mu = tuple(sorted((i, j, k), reverse=True))
    row_weight = sum(comb(t, 2) for t in mu)
    lines = []
    for lam in sorted(partitions(n)):
        K = kostka_cached(lam, mu)
        if K == 0:
            continue
        E = n * (n - 1) // 2 + kappa(lam) - 2 * row_weight
        splits = balanced_split(K) if balanced else {0: K}
        line = SpectralLine(lam, Eigenvalue(d, 0, E), K, q_hook_dimension_A(lam), _splits(splits))
        line.check()
        lines.append(line)
    return ZetaFactor("A", n - 1, (i, j, k), orbit, m, tuple(lines))


def _n_chi_C(lam: Partition, mu: Partition, i: int, j: int, k: int) -> int:
    total = 0
    for a in range(i + 1):
        for b in range(j + 1):
            if a + b + k != sum(lam) or (i - a) + (j - b) != sum(mu):
                continue
            total += kostka_cached(lam, (a, b, k)) * kostka_cached(mu, (i - a, j - b))
    return total


def special_sign(lam: Partition, mu: Partition, k: int) -> int:
    """epsilon in m(+1) - m(-1) for the c = 2 case with |mu| even."""
    lp = list(lam) + [0, 0, 0]
    l2, l3 = lp[1], lp[2]
    ell2 = sum(lam) - k
    if ell2 % 2:
        return 0
    ell = ell2 // 2
    A = max(l3, l2 + l3 - k)
    B = min(l2, ell, 2 * ell - l2)
    mu1 = mu[0] if mu else 0
    sign = (-1) ** (sum(mu) // 2 + mu1)
    return sign * ((-1) ** A + (-1) ** B) // 2


def typeC_component(n: int, i: int, j: int) -> ZetaFactor:
    """Factor of the Sp_2n building for the orbit through types (i, i+j)."""
    if not (1 <= i <= j and i + j <= n):
        raise ValueError(f"invalid parameters i={i}, j={j} for n={n}")
    k = n - i - j
    orbit, m = _orbit_and_m("C", n, (i, i + j))
    special = i == j
    c, d = orbit.c, 2 * m // orbit.c
    if (c, d) != ((2, 4) if special else (4, 2)):
        raise AssertionError(f"unexpected (c,d)=({c},{d}) for ({i},{j})")
    ell_wI = i * (i - 1) // 2 + j * (j - 1) // 2 + k * k
    lines = []
    for lam, mu in bipartitions(n):
        N = _n_chi_C(lam, mu, i, j, k)
        if N == 0:
            continue
        f = n * n + sum(lam) - sum(mu) + 2 * (kappa(lam) + kappa(mu))
        E = f - 2 * ell_wI
        odd = sum(mu) % 2 == 1
        if not special:
            splits = {1 if odd else 0: N}
        elif odd:
            if N % 2:
                raise ArithmeticError("split parity violated")
            splits = {1: N // 2, 3: N // 2}
        else:
            eps = special_sign(lam, mu, k)
            if (N + eps) % 2:
                raise ArithmeticError("split parity violated")
            splits = {0: (N + eps) // 2, 2: (N - eps) // 2}
        line = SpectralLine((lam, mu), Eigenvalue(d, 0, E), N, generic_degree_C((lam, mu)), _splits(splits))
        line.check()
        lines.append(line)
    return ZetaFactor("C", n, (i, j, k), orbit, m, tuple(lines))


def full_edge_zeta(family: str, rank: int) -> list[ZetaFactor]:
    """One factor per type orbit, in the order of :func:`enumerate_orbits`."""
    family = family.upper()
    if family not in ("A", "B", "C"):
        raise ValueError(f"no closed formula in scope for family {family}")
    # B and C have the same Weyl group and the same formulas for equal parameters
    coxeter = "A" if family == "A" else "C"
    rs = build_root_system(coxeter, rank)
    out = []
    for orbit in enumerate_orbits(rs):
        # the smallest pair of an orbit is (i, i+j) with i <= j in type C;
        # type A formulas only depend on the multiset {i, j, k}
        a, b = orbit.start
        if coxeter == "A":
            fac = typeA_component(rank + 1, a, b - a, rank + 1 - b)
        else:
            fac = typeC_component(rank, a, b - a)
        if fac.orbit != orbit:
            raise AssertionError(f"orbit mismatch for start pair {orbit.start}")
        if family == "B":
            fac = ZetaFactor("B", fac.rank, fac.params, fac.orbit, fac.m, fac.lines)
        out.append(fac)
    return out


def predicted_closed_walks(factors: Sequence[ZetaFactor], L: int, q=None) -> int:
    """N(L) = sum over factors with c | L of c * sum m(zeta) deg lambda^(L/c)."""
    if q is None:
        raise ValueError("needs concrete q")
    if L < 1:
        raise ValueError("L must be positive")
    total = Fraction(0)
    for fac in factors:
        if L % fac.c:
            continue
        pairs = [ev for line in fac.lines for ev in line.eigenvalues()]
        total += fac.c * poly_eval(eigenvalue_power_sum(pairs, L // fac.c), q)
    if total.denominator != 1 or total < 0:
        raise ArithmeticError(f"closed-walk count {total} is not a nonnegative integer")
    return int(total)


# ---------------------------------------------------------------------------
# rendering


def label_text(label: Label) -> str:
    def part(p):
        return "(" + ",".join(str(x) for x in p) + ")"

    if label and isinstance(label[0], tuple):
        return "(" + ",".join(part(p) for p in label) + ")"
    return part(label)


_ZETA_SYMBOL = {
    # (d, k) -> (sign, unit) so that 1 - zeta x reads "1 <sign> <unit>x"
    (1, 0): ("-", ""),
    (2, 0): ("-", ""),
    (2, 1): ("+", ""),
    (3, 0): ("-", ""),
    (3, 1): ("-", "ω "),
    (3, 2): ("-", "ω² "),
    (4, 0): ("-", ""),
    (4, 1): ("-", "i "),
    (4, 2): ("+", ""),
    (4, 3): ("+", "i "),
}


def _linear_factor(d: int, k: int, exp: Fraction, c: int) -> str:
    sign, unit = _ZETA_SYMBOL[(d, k)]
    e = str(exp.numerator) if exp.denominator == 1 else f"({exp.numerator}/{exp.denominator})"
    return f"(1 {sign} {unit}q^{e} u^{c})"


def line_text(line: SpectralLine, c: int) -> str:
    d = line.d
    exp = Fraction(line.exponent, d)
    deg = format_factored(line.degree)
    sm = line.split_map()
    chunks = []
    done = set()
    for k in sorted(sm):
        if k in done:
            continue
        conj = (-k) % d
        if conj != k and conj in sm:
            # conjugate pair, listed as in the tables: the "+" factor first
            pair = sorted([k, conj], key=lambda t: _ZETA_SYMBOL[(d, t)][0] == "-")
            body = "(" + "".join(_linear_factor(d, t, exp, c) for t in pair) + ")"
            done.update((k, conj))
        else:
            body = _linear_factor(d, k, exp, c)
            done.add(k)
        chunks.append(f"{body}^{{[{sm[k]}]×[{deg}]}}")
    return " ".join(chunks)


def _factor_header(fac: ZetaFactor) -> str:
    i, j, k = fac.params
    return f"# orbit {fac.orbit.text()}  (i,j,k)=({i},{j},{k})  c={fac.c} m={fac.m} d={fac.d}"


def emit_text(factors: Sequence[ZetaFactor]) -> str:
    if not factors:
        return "1\n"
    out = []
    for fac in factors:
        out.append(_factor_header(fac))
        labels = [label_text(line.label) for line in fac.lines]
        width = max(len(s) for s in labels) + 2
        for lab, line in zip(labels, fac.lines):
            out.append(lab.ljust(width) + line_text(line, fac.c))
    return "\n".join(out) + "\n"


def factor_to_dict(fac: ZetaFactor) -> dict:
    lines = []
    for line in fac.lines:
        if fac.family == "A":
            lam, mu = line.label, None
        else:
            lam, mu = line.label
        lines.append(
            {
                "lambda": list(lam),
                "mu": None if mu is None else list(mu),
                "q_exp": {"num": line.exponent, "den": line.d},
                "n": line.n_total,
                "splits": {str(k): v for k, v in line.splits},
                "degree": format_poly(line.degree),
            }
        )
    return {
        "cycle": list(fac.orbit.cycle),
        "params": list(fac.params),
        "c": fac.c,
        "m": fac.m,
        "d": fac.d,
        "lines": lines,
    }


def factor_from_dict(obj: dict, family: str, rank: int) -> ZetaFactor:
    lines = []
    for ln in obj["lines"]:
        lam = tuple(ln["lambda"])
        label = lam if ln["mu"] is None else (lam, tuple(ln["mu"]))
        lines.append(
            SpectralLine(
                label,
                Eigenvalue(ln["q_exp"]["den"], 0, ln["q_exp"]["num"]),
                ln["n"],
                parse_poly(ln["degree"]),
                _splits({int(k): v for k, v in ln["splits"].items()}),
            )
        )
    return ZetaFactor(family, rank, tuple(obj["params"]), TypeOrbit(tuple(obj["cycle"])), obj["m"], tuple(lines))


def emit_json(factors: Sequence[ZetaFactor], family: str | None = None, rank: int | None = None) -> str:
    if factors:
        family = family or factors[0].family
        rank = rank if rank is not None else factors[0].rank
    doc = {"family": family, "rank": rank, "orbits": [factor_to_dict(f) for f in factors]}
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def parse_json(text: str) -> list[ZetaFactor]:
    doc = json.loads(text)
    return [factor_from_dict(o, doc["family"], doc["rank"]) for o in doc["orbits"]]


def emit_factored(factors: Sequence[ZetaFactor], format: str = "text") -> str:
    if format == "text":
        return emit_text(factors)
    if format == "json":
        return emit_json(factors)
    raise ValueError(f"unknown format {format!r}")
