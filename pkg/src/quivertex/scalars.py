"""Exact scalar arithmetic.

Two tiers share one interface: a specialized tier where (hbar, q) are fixed
nonzero rationals and every scalar is a ``fractions.Fraction``, and a small
symbolic tier where scalars are fractions of integer-coefficient Laurent
polynomials in (hbar, q).  All engine code goes through a field context to
mint hbar/q powers and literals; ordinary ``+ - * /`` works on both tiers.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

_ONE_POLY = {(0, 0): 1}


def _strip(p: dict) -> dict:
    return {e: c for e, c in p.items() if c}


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        elif e in out:
            del out[e]
    return out


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (x1, y1), c1 in a.items():
        for (x2, y2), c2 in b.items():
            e = (x1 + x2, y1 + y2)
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def _pneg(a: dict) -> dict:
    return {e: -c for e, c in a.items()}


def _pcontent(a: dict) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, abs(c))
    return g or 1


def _pstr(p: dict) -> str:
    if not p:
        return "0"
    bits = []
    for (a, b) in sorted(p, reverse=True):
        c = p[(a, b)]
        term = []
        if abs(c) != 1 or (a == 0 and b == 0):
            term.append(str(abs(c)))
        if a:
            term.append("hbar" if a == 1 else f"hbar^{a}")
        if b:
            term.append("q" if b == 1 else f"q^{b}")
        s = "*".join(term)
        if not bits:
            bits.append(("-" if c < 0 else "") + s)
        else:
            bits.append(("- " if c < 0 else "+ ") + s)
    return " ".join(bits)


class RatFunc:
    """Fraction of integer Laurent polynomials in (hbar, q).

    Kept without multivariate gcd reduction; equality is decided by
    cross-multiplication.  Intended for small sanity-tier computations only.
    """

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: dict, den: dict | None = None):
        den = _strip(den) if den is not None else dict(_ONE_POLY)
        num = _strip(num)
        if not den:
            raise ZeroDivisionError("zero denominator in symbolic scalar")
        if not num:
            self.num, self.den = {}, dict(_ONE_POLY)
            return
        # shift by the joint minimal monomial so both sides are polynomials
        keys = list(num) + list(den)
        sh = (min(k[0] for k in keys), min(k[1] for k in keys))
        if sh != (0, 0):
            num = {(a - sh[0], b - sh[1]): c for (a, b), c in num.items()}
            den = {(a - sh[0], b - sh[1]): c for (a, b), c in den.items()}
        g = gcd(_pcontent(num), _pcontent(den))
        lead = den[max(den)]
        if lead < 0:
            g = -g
        if g != 1:
            num = {e: c // g for e, c in num.items()}
            den = {e: c // g for e, c in den.items()}
        self.num, self.den = num, den

    @staticmethod
    def from_int(n: int) -> "RatFunc":
        return RatFunc({(0, 0): n})

    @staticmethod
    def from_fraction(x: Fraction) -> "RatFunc":
        x = Fraction(x)
        return RatFunc({(0, 0): x.numerator}, {(0, 0): x.denominator})

    @staticmethod
    def monomial(hbar_exp: int = 0, q_exp: int = 0, coeff: int = 1) -> "RatFunc":
        return RatFunc({(hbar_exp, q_exp): coeff})

    @staticmethod
    def _coerce(x) -> "RatFunc | None":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc.from_int(x)
        if isinstance(x, Fraction):
            return RatFunc.from_fraction(x)
        return None

    @property
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(_padd(self.num, o.num), self.den)
        return RatFunc(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(_pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cheap cancellations catch telescoping products
        if self.num == o.den:
            return RatFunc(o.num, self.den)
        if o.num == self.den:
            return RatFunc(self.num, o.den)
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverting symbolic zero")
        return RatFunc(self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.from_int(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _pmul(self.num, o.den) == _pmul(o.num, self.den)

    def evaluate(self, hbar: Fraction, q: Fraction) -> Fraction:
        """Specialize to exact rationals."""

        def ev(p):
            return sum((Fraction(c) * hbar**a * q**b for (a, b), c in p.items()),
                       Fraction(0))

        den = ev(self.den)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at this (hbar, q)")
        return ev(self.num) / den

    def __repr__(self) -> str:
        if self.den == _ONE_POLY:
            return _pstr(self.num)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    __str__ = __repr__


class SpecializedField:
    """Scalars are Fractions; hbar and q fixed to exact nonzero rationals."""

    mode = "specialized"

    def __init__(self, hbar, q):
        hbar, q = Fraction(hbar), Fraction(q)
        if hbar == 0 or q == 0:
            raise ValueError("hbar and q must be nonzero")
        self.hbar_value = hbar
        self.q_value = q
        self.hbar = hbar
        self.q = q
        self.one = Fraction(1)
        self.zero = Fraction(0)

    def hbar_q(self, a: int = 0, b: int = 0) -> Fraction:
        return self.hbar_value**a * self.q_value**b

    def hq(self, e: int = 1) -> Fraction:
        return (self.hbar_value / self.q_value) ** e

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, x) -> Fraction:
        return Fraction(x)

    def __repr__(self) -> str:
        return f"SpecializedField(hbar={self.hbar_value}, q={self.q_value})"


class SymbolicField:
    """Scalars are RatFunc values; hbar and q stay formal."""

    mode = "symbolic"

    def __init__(self):
        self.hbar = RatFunc.monomial(1, 0)
        self.q = RatFunc.monomial(0, 1)
        self.one = RatFunc.from_int(1)
        self.zero = RatFunc.from_int(0)

    def hbar_q(self, a: int = 0, b: int = 0) -> RatFunc:
        return RatFunc.monomial(a, b)

    def hq(self, e: int = 1) -> RatFunc:
        return RatFunc.monomial(e, -e)

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.from_int(n)

    def from_fraction(self, x) -> RatFunc:
        return RatFunc.from_fraction(Fraction(x))

    @staticmethod
    def specialize(x: RatFunc, fld: SpecializedField) -> Fraction:
        return x.evaluate(fld.hbar_value, fld.q_value)

    def __repr__(self) -> str:
        return "SymbolicField()"


DEFAULT_HBAR = Fraction(2, 3)
DEFAULT_Q = Fraction(1, 5)


def is_generic_point(hbar, q, hbar_bound: int = 10, q_bound: int = 40) -> bool:
    """True when no small multiplicative relation hbar^m = q^(+-k) holds.

    Such relations are exactly what makes Pochhammer denominators vanish at
    the degrees the engine works with.
    """
    hbar, q = Fraction(hbar), Fraction(q)
    if hbar == 0 or q == 0 or abs(hbar) == 1 or abs(q) == 1:
        return False
    for m in range(1, hbar_bound + 1):
        hm = hbar**m
        for k in range(q_bound + 1):
            qk = q**k
            if hm == qk or hm * qk == 1:
                return False
    return True


def default_field() -> SpecializedField:
    return SpecializedField(DEFAULT_HBAR, DEFAULT_Q)


def random_point(rng: random.Random, tries: int = 1000) -> tuple[Fraction, Fraction]:
    """Draw a generic rational (hbar, q) pair from a seeded generator."""
    for _ in range(tries):
        hbar = Fraction(rng.randint(2, 11), rng.randint(2, 11))
        q = Fraction(rng.randint(2, 11), rng.randint(2, 11))
        if hbar != q and is_generic_point(hbar, q):
            return hbar, q
    raise RuntimeError("could not find a generic rational point")


def random_field(rng: random.Random) -> SpecializedField:
    hbar, q = random_point(rng)
    return SpecializedField(hbar, q)
