"""Exact arithmetic: Laurent polynomials in a fractional power of q,
cyclotomic numbers of order 1-4, and eigenvalues of the form zeta * q^(E/d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _int_root(value: int, k: int) -> int | None:
    """Exact non-negative integer k-th root of ``value`` or None."""
    if value < 0:
        return None
    if value in (0, 1) or k == 1:
        return value
    r = round(value ** (1.0 / k))
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == value:
            return cand
    lo, hi = 0, 1
    while hi**k < value:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < value:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == value else None


def rational_power(base: Fraction, exponent: Fraction) -> Fraction:
    """Exact ``base ** exponent`` for rational base > 0, or ValueError."""
    a, b = exponent.numerator, exponent.denominator
    if b == 1:
        return base**a
    num = _int_root(base.numerator, b)
    den = _int_root(base.denominator, b)
    if num is None or den is None:
        raise ValueError("non-integral exponent")
    return Fraction(num, den) ** a


class LaurentPoly:
    """Finite sum of ``c * q^(e/denom)`` with rational ``c``.

    Immutable. ``denom`` is kept as constructed so arithmetic can stay in
    the original root order; equality and hashing normalize.
    """

    __slots__ = ("denom", "terms")

    def __init__(self, terms: Mapping[int, Rational] | None = None, denom: int = 1):
        if denom <= 0:
            raise ValueError("denom must be positive")
        clean = {}
        for e, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                clean[int(e)] = c
        object.__setattr__(self, "denom", int(denom))
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # construction helpers
    @classmethod
    def const(cls, c: Rational) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def q(cls, exponent: Rational = 1) -> LaurentPoly:
        """The monomial ``q^exponent`` (exponent may be a fraction)."""
        x = Fraction(exponent)
        return cls({x.numerator: 1}, x.denominator)

    @classmethod
    def from_exponents(cls, terms: Mapping[Fraction, Rational]) -> LaurentPoly:
        d = 1
        for x in terms:
            d = _lcm(d, Fraction(x).denominator)
        return cls({int(Fraction(x) * d): c for x, c in terms.items()}, d)

    # views
    def exponents(self) -> dict[Fraction, Fraction]:
        return {Fraction(e, self.denom): c for e, c in self.terms.items()}

    def _normal(self) -> tuple:
        return tuple(sorted(self.exponents().items()))

    def with_denom(self, d: int) -> LaurentPoly:
        if d % self.denom:
            raise ValueError("target denominator must be a multiple")
        f = d // self.denom
        return LaurentPoly({e * f: c for e, c in self.terms.items()}, d)

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(e % self.denom == 0 for e in self.terms)

    def degree(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(max(self.terms), self.denom)

    def low_degree(self) -> Fraction:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return Fraction(min(self.terms), self.denom)

    # arithmetic
    def _align(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly, int]:
        d = _lcm(self.denom, other.denom)
        return self.with_denom(d), other.with_denom(d), d

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, d = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.denom)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, d = self._align(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have negative powers")
            (e, c), = self.terms.items()
            return LaurentPoly({e * k: Fraction(1) / c ** (-k)}, self.denom)
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c / other for e, c in self.terms.items()}, self.denom)
        return poly_divexact(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._normal() == other._normal()

    def __hash__(self):
        return hash(self._normal())

    def __call__(self, q_value: Rational) -> Fraction:
        return poly_eval(self, q_value)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_add(p1: LaurentPoly, p2: LaurentPoly) -> LaurentPoly:
    return p1 + p2


def poly_mul(p1: LaurentPoly, p2: LaurentPoly) -> LaurentPoly:
    return p1 * p2


def poly_eval(p: LaurentPoly, q_value: Rational) -> Fraction:
    """Evaluate at a positive rational q.

    Terms with a fractional exponent are accepted only when q has an exact
    rational root of the needed order; anything else raises
    ``ValueError("non-integral exponent")``.
    """
    if q_value is None:
        raise ValueError("needs concrete q")
    q_value = Fraction(q_value)
    if q_value <= 0:
        raise ValueError("q must be positive")
    total = Fraction(0)
    for x, c in p.exponents().items():
        total += c * rational_power(q_value, x)
    return total


def poly_divexact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``num / den``; raises ValueError("not a polynomial")."""
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    a, b, d = num._align(den)
    if a.is_zero():
        return LaurentPoly({}, d)
    rem = dict(a.terms)
    bt = b.terms
    b_lead = max(bt)
    b_low = min(bt)
    b_lead_c = bt[b_lead]
    q_low = min(a.terms) - b_low
    quot: dict[int, Fraction] = {}
    while rem:
        top = max(rem)
        shift = top - b_lead
        if shift < q_low:
            raise ValueError("not a polynomial")
        coef = rem[top] / b_lead_c
        quot[shift] = coef
        for e, c in bt.items():
            k = e + shift
            v = rem.get(k, 0) - coef * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(quot, d)


def _fmt_exp(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"({x.numerator}/{x.denominator})"


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(x: Fraction, var: str = "q") -> str:
    if x == 0:
        return "1"
    if x == 1:
        return var
    return f"{var}^{_fmt_exp(x)}"


def format_poly(p: LaurentPoly) -> str:
    """Sparse text form, decreasing exponent, e.g. ``1/2*q^3 - q + 2``."""
    items = sorted(p.exponents().items(), reverse=True)
    if not items:
        return "0"
    out = []
    for idx, (x, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if x == 0:
            body = _fmt_coeff(c)
        elif c == 1:
            body = format_monomial(x)
        else:
            body = f"{_fmt_coeff(c)}*{format_monomial(x)}"
        if idx == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    tokens = text.replace(" - ", " + -").split(" + ")
    terms: dict[Fraction, Fraction] = {}
    for tok in tokens:
        tok = tok.strip()
        neg = tok.startswith("-")
        if neg:
            tok = tok[1:]
        if "q" not in tok:
            c, x = Fraction(tok), Fraction(0)
        else:
            if "*" in tok:
                cs, mono = tok.split("*", 1)
                c = Fraction(cs)
            else:
                c, mono = Fraction(1), tok
            if mono == "q":
                x = Fraction(1)
            else:
                x = Fraction(mono[2:].strip("()"))
        terms[x] = terms.get(x, 0) + (-c if neg else c)
    return LaurentPoly.from_exponents(terms)


_PHI: dict[int, LaurentPoly] = {}


def cyclotomic_poly(k: int) -> LaurentPoly:
    """The k-th cyclotomic polynomial in q."""
    if k not in _PHI:
        p = LaurentPoly({k: 1, 0: -1})
        for e in range(1, k):
            if k % e == 0:
                p = poly_divexact(p, cyclotomic_poly(e))
        _PHI[k] = p
    return _PHI[k]


def _try_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly | None:
    try:
        return poly_divexact(num, den)
    except ValueError:
        return None


def cyclotomic_factorization(p: LaurentPoly):
    """Split p as ``const * q^a * prod Phi_k^e * rest``.

    Returns ``(const, a, {k: e}, rest)``; ``rest`` is 1 when p is a product of
    cyclotomic polynomials, which holds for every unipotent degree.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    a = p.low_degree()
    rest = p * LaurentPoly.q(-a)
    const = rest.exponents()[rest.degree()]
    rest = rest * LaurentPoly.const(1 / const)
    powers: dict[int, int] = {}
    if rest.is_integral():
        bound = 6 * int(rest.degree()) + 6
        for k in range(1, bound + 1):
            if rest.degree() == 0:
                break
            while True:
                quo = _try_div(rest, cyclotomic_poly(k))
                if quo is None:
                    break
                rest = quo
                powers[k] = powers.get(k, 0) + 1
    return const, a, powers, rest


def format_factored(p: LaurentPoly) -> str:
    """Factored text form, e.g. ``1/2*q^4*(q + 1)^2*(q^2 - q + 1)``."""
    if p.is_zero():
        return "0"
    const, a, powers, rest = cyclotomic_factorization(p)
    parts = []
    if const != 1:
        parts.append(_fmt_coeff(const) if const > 0 else f"({_fmt_coeff(const)})")
    if a != 0:
        parts.append(format_monomial(a))
    for k in sorted(powers):
        e = powers[k]
        parts.append(f"({format_poly(cyclotomic_poly(k))})" + (f"^{e}" if e > 1 else ""))
    if rest != LaurentPoly.const(1):
        parts.append(f"({format_poly(rest)})")
    return "*".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# cyclotomic numbers of small order


_CYCLO_ORDERS = (1, 2, 3, 4)


@dataclass(frozen=True)
class Cyclotomic:
    """``a + b*z`` with z = omega (order 3) or i (order 4); b = 0 for order <= 2."""

    order: int
    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        if self.order not in _CYCLO_ORDERS:
            raise ValueError(f"unsupported cyclotomic order {self.order}")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.order <= 2 and self.b != 0:
            raise ValueError("orders 1 and 2 are rational")

    @classmethod
    def root_of_unity(cls, d: int, k: int) -> Cyclotomic:
        k %= d
        if d == 1:
            return cls(1, 1)
        if d == 2:
            return cls(2, 1 if k == 0 else -1)
        if d == 3:
            return (cls(3, 1), cls(3, 0, 1), cls(3, -1, -1))[k]
        if d == 4:
            return (cls(4, 1), cls(4, 0, 1), cls(4, -1), cls(4, 0, -1))[k]
        raise ValueError(f"unsupported cyclotomic order {d}")

    def _common(self, other: Cyclotomic) -> int:
        if self.order <= 2:
            return max(other.order, self.order)
        if other.order <= 2 or other.order == self.order:
            return self.order
        raise ValueError("cannot mix cyclotomic orders 3 and 4")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic(1, other)
        d = self._common(other)
        return Cyclotomic(d, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, -self.a, -self.b)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, self.a * other, self.b * other)
        d = self._common(other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        if d == 3:
            # omega^2 = -1 - omega
            return Cyclotomic(3, a1 * a2 - b1 * b2, a1 * b2 + a2 * b1 - b1 * b2)
        if d == 4:
            return Cyclotomic(4, a1 * a2 - b1 * b2, a1 * b2 + a2 * b1)
        return Cyclotomic(d, a1 * a2)

    __rmul__ = __mul__

    def conjugate(self) -> Cyclotomic:
        if self.order == 3:
            # conj(a + b w) = a + b w^2 = (a - b) - b w
            return Cyclotomic(3, self.a - self.b, -self.b)
        return Cyclotomic(self.order, self.a, -self.b)

    def is_real(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError("value is not rational")
        return self.a

    def to_complex(self) -> complex:
        if self.order == 3:
            w = complex(-0.5, 3**0.5 / 2)
            return float(self.a) + float(self.b) * w
        if self.order == 4:
            return complex(float(self.a), float(self.b))
        return complex(float(self.a))


@dataclass(frozen=True, order=True)
class Eigenvalue:
    """``zeta_d^k * q^(E/d)`` with zeta_d = exp(2 pi i / d)."""

    root_order: int
    unity_index: int
    q_exp_num: int

    def __post_init__(self):
        if self.root_order not in _CYCLO_ORDERS:
            raise ValueError(f"unsupported root order {self.root_order}")
        if not 0 <= self.unity_index < self.root_order:
            raise ValueError("unity_index out of range")

    @property
    def q_exponent(self) -> Fraction:
        return Fraction(self.q_exp_num, self.root_order)

    @property
    def zeta(self) -> Cyclotomic:
        return Cyclotomic.root_of_unity(self.root_order, self.unity_index)

    def power(self, l: int) -> tuple[Cyclotomic, Fraction]:
        """``(zeta^l, l*E/d)``."""
        d = self.root_order
        return Cyclotomic.root_of_unity(d, self.unity_index * l), Fraction(self.q_exp_num * l, d)

    def q_power_of_dth(self) -> int:
        """Exponent of q in ``self ** root_order``."""
        zeta, x = self.power(self.root_order)
        assert zeta == Cyclotomic.root_of_unity(self.root_order, 0)
        if x.denominator != 1:
            raise AssertionError("d-th power is not an integral power of q")
        return x.numerator

    def conjugate(self) -> Eigenvalue:
        return Eigenvalue(self.root_order, (-self.unity_index) % self.root_order, self.q_exp_num)


Multiplicity = Union[int, Fraction, LaurentPoly]


def eigenvalue_power_sum(lines: Iterable[tuple[Eigenvalue, Multiplicity]], l: int) -> LaurentPoly:
    """``sum(mult * lam**l)`` as an exact polynomial in q.

    Multiplicities may themselves be polynomials in q (degree times split
    count). Raises ``ValueError("asymmetric root multiplicities")`` if the
    non-real parts do not cancel.
    """
    # exponent of q -> Cyclotomic coefficient, accumulated per cyclotomic field
    acc: dict[int, dict[Fraction, Cyclotomic]] = {}
    for lam, mult in lines:
        if isinstance(mult, (int, Fraction)):
            if mult < 0:
                raise ValueError("multiplicities must be non-negative")
            mult = LaurentPoly.const(mult)
        zeta, x = lam.power(l)
        field = 3 if lam.root_order == 3 else 4
        bucket = acc.setdefault(field, {})
        for y, c in mult.exponents().items():
            key = x + y
            term = zeta * c
            bucket[key] = bucket[key] + term if key in bucket else term
    out: dict[Fraction, Fraction] = {}
    for bucket in acc.values():
        for x, v in bucket.items():
            if not v.is_real():
                raise ValueError("asymmetric root multiplicities")
            out[x] = out.get(x, 0) + v.a
    return LaurentPoly.from_exponents(out)
