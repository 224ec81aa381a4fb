"""Truncated z-series and q-Pochhammer arithmetic.

A ``ZMonomial`` is a Laurent monomial (hbar/q)^k * prod z_i^(d_i) in the
Kahler variables, indexed by integers.  A ``TruncatedSeries`` stores a
finitely supported map from z-exponent vectors to exact scalars, capped at a
total z-degree; the (hbar/q) part of a monomial is always folded into the
coefficient by the field context.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapMismatch, NonTruncatingError, PoleError

# z-exponent vectors are canonical sorted tuples of (index, exponent) pairs
ZKey = tuple


@dataclass(frozen=True)
class ZMonomial:
    """(hbar/q)^hq_exp * prod z_i^(e_i), exponents finitely supported."""

    hq_exp: int = 0
    z_exps: ZKey = ()

    @staticmethod
    def from_exps(exps, hq_exp: int = 0) -> "ZMonomial":
        items = tuple(sorted((int(i), int(e)) for i, e in dict(exps).items() if e))
        return ZMonomial(hq_exp, items)

    @staticmethod
    def variable(i: int, power: int = 1, hq_exp: int = 0) -> "ZMonomial":
        return ZMonomial.from_exps({i: power}, hq_exp)

    @staticmethod
    def one() -> "ZMonomial":
        return ZMonomial()

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.z_exps)

    def exps(self) -> dict:
        return dict(self.z_exps)

    def __mul__(self, other: "ZMonomial") -> "ZMonomial":
        return ZMonomial(self.hq_exp + other.hq_exp,
                         zkey_mul(self.z_exps, other.z_exps))

    def __pow__(self, k: int) -> "ZMonomial":
        return ZMonomial(self.hq_exp * k,
                         tuple((i, e * k) for i, e in self.z_exps) if k else ())

    def inverse(self) -> "ZMonomial":
        return self**-1

    def sort_key(self):
        return (self.z_exps, self.hq_exp)

    def __str__(self) -> str:
        bits = []
        if self.hq_exp:
            bits.append("(hbar/q)" if self.hq_exp == 1 else f"(hbar/q)^{self.hq_exp}")
        for i, e in self.z_exps:
            bits.append(f"z_{i}" if e == 1 else f"z_{i}^{e}")
        return "*".join(bits) if bits else "1"


def zkey_mul(k1: ZKey, k2: ZKey) -> ZKey:
    out = dict(k1)
    for i, e in k2:
        s = out.get(i, 0) + e
        if s:
            out[i] = s
        elif i in out:
            del out[i]
    return tuple(sorted(out.items()))


def zkey_deg(key: ZKey) -> int:
    return sum(e for _, e in key)


class TruncatedSeries:
    """Finitely supported series in the z variables, capped by total degree.

    Zero coefficients are pruned eagerly, so equality is map equality.
    """

    __slots__ = ("cap", "terms")

    def __init__(self, cap: int, terms: dict | None = None):
        if cap < 0:
            raise ValueError("cap must be nonnegative")
        self.cap = cap
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if zkey_deg(key) <= cap and not _is_zero(c):
                    self.terms[key] = c

    @staticmethod
    def one(cap: int, fld) -> "TruncatedSeries":
        return TruncatedSeries(cap, {(): fld.one})

    def coefficient(self, key, fld):
        if isinstance(key, ZMonomial):
            key = key.z_exps
        elif isinstance(key, dict):
            key = tuple(sorted((i, e) for i, e in key.items() if e))
        return self.terms.get(key, fld.zero)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.cap != other.cap:
            raise CapMismatch(f"caps differ: {self.cap} != {other.cap}")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            out[key] = c if s is None else s + c
        return TruncatedSeries(self.cap, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.cap != other.cap:
            raise CapMismatch(f"caps differ: {self.cap} != {other.cap}")
        out: dict = {}
        for k1, c1 in self.terms.items():
            d1 = zkey_deg(k1)
            for k2, c2 in other.terms.items():
                if d1 + zkey_deg(k2) > self.cap:
                    continue
                key = zkey_mul(k1, k2)
                prod = c1 * c2
                s = out.get(key)
                out[key] = prod if s is None else s + prod
        return TruncatedSeries(self.cap, out)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.cap, {k: v * c for k, v in self.terms.items()})

    def mul_monomial(self, fld, mono: ZMonomial) -> "TruncatedSeries":
        """Multiply by a monomial; its (hbar/q) power folds into coefficients."""
        if any(e < 0 for _, e in mono.z_exps):
            raise ValueError("series monomials must have nonnegative z-exponents")
        scalar = fld.hq(mono.hq_exp)
        out = {}
        for key, c in self.terms.items():
            new = zkey_mul(key, mono.z_exps)
            if zkey_deg(new) <= self.cap:
                out[new] = c * scalar
        return TruncatedSeries(self.cap, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(
            f"({c})*{ZMonomial(0, k)}" if k else f"({c})"
            for k, c in sorted(self.terms.items())
        )
        return f"TruncatedSeries(cap={self.cap}: {body or '0'})"

    def to_canonical(self) -> dict:
        """JSON-ready form with terms sorted by exponent vector."""
        return {
            "cap": self.cap,
            "terms": [
                {"z": {str(i): e for i, e in key}, "coeff": str(self.terms[key])}
                for key in sorted(self.terms)
            ],
        }


def _is_zero(c) -> bool:
    return not c


def qpoch_extended(fld, x, d: int):
    """(x)_d split into a vanishing order and a regular part.

    At a generic point the only factor of a Pochhammer product that can
    vanish is literally (1 - 1); the symbol equals ``regular`` times that
    critical factor raised to ``order`` (inverse factors of the negative
    product count with order -1).  Summing orders across a whole term of
    Pochhammer ratios decides vanishing exactly even when zeros and poles
    from different symbols cancel.
    """
    if d == 0:
        return 0, fld.one
    order = 0
    out = fld.one
    if d > 0:
        for k in range(d):
            f = fld.one - x * fld.hbar_q(0, k)
            if _is_zero(f):
                order += 1
            else:
                out = out * f
        return order, out
    for k in range(1, -d + 1):
        f = fld.one - x * fld.hbar_q(0, -k)
        if _is_zero(f):
            order -= 1
        else:
            out = out * f
    return order, fld.one / out


def qpoch(fld, x, d: int):
    """q-Pochhammer (x)_d for integer d, exact.

    For d >= 0 this is prod_{k<d} (1 - x q^k); for d = -n it is
    prod_{k=1..n} (1 - x q^-k)^(-1), raising PoleError when a factor of the
    inverse product vanishes.  Accepts a pure-scalar ZMonomial for x.
    """
    if isinstance(x, ZMonomial):
        if x.z_exps:
            raise TypeError("qpoch argument must be scalar; z variables present")
        x = fld.hq(x.hq_exp)
    order, val = qpoch_extended(fld, x, d)
    if order > 0:
        return fld.zero
    if order < 0:
        raise PoleError(f"(x)_{d} has a vanishing inverse factor at x={x}")
    return val


def poch_ratio_product(fld, ratios):
    """Product of Pochhammer ratios (a)_d / (b)_d with exact zero bookkeeping.

    The net vanishing order across the whole term decides: positive order is
    an exact zero (a vanishing numerator wins over any denominator), zero
    order is the regular value, and negative order is a hard PoleError since
    a surviving vanishing denominator signals an implementation error.
    """
    order = 0
    num_val = fld.one
    den_val = fld.one
    for a, b, d in ratios:
        oa, va = qpoch_extended(fld, a, d)
        ob, vb = qpoch_extended(fld, b, d)
        order += oa - ob
        num_val = num_val * va
        den_val = den_val * vb
    if order > 0:
        return fld.zero
    if order < 0:
        raise PoleError("net vanishing denominator in a Pochhammer-ratio term")
    return num_val / den_val


def qbinomial_series(fld, w: ZMonomial, cap: int) -> TruncatedSeries:
    """Sum of (hbar)_d / (q)_d * w^d, truncated at total z-degree cap."""
    if w.degree < 1:
        raise NonTruncatingError(f"monomial {w} has z-degree 0")
    terms = {(): fld.one}
    hq = fld.hq(w.hq_exp)
    for d in range(1, cap // w.degree + 1):
        coeff = qpoch(fld, fld.hbar, d) / qpoch(fld, fld.q, d)
        key = (w**d).z_exps
        terms[key] = coeff * hq**d
    return TruncatedSeries(cap, terms)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product with terms above the (shared) cap discarded."""
    return a * b


def pleth_exp(fld, monomials, cap: int) -> TruncatedSeries:
    """Symmetric-algebra character of ((1-hbar)/(1-q)) * sum of monomials.

    Each monomial contributes one q-binomial factor; the empty list gives 1.
    """
    out = TruncatedSeries.one(cap, fld)
    for w in monomials:
        out = out * qbinomial_series(fld, w, cap)
    return out
