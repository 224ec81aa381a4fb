"""Macdonald symmetric functions and the operator route.

Everything lives in abstract graded bases (power sums p, monomials m, and
the orthogonal basis M); no variable set is ever chosen.  The context object
does exact Gram-Schmidt against dominance order, which serves as the oracle
tier; the production tier is the closed-form Pieri coefficients, and the two
must agree wherever they overlap.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache

from .errors import DegenerateSpecialization, NotInterlacing
from .partitions import (
    Partition,
    all_partitions,
    interlaces,
    partitions_above,
    partitions_below,
    profile_span,
    sigma_hat,
    tau,
)
from .series import TruncatedSeries, qpoch, zkey_deg, zkey_mul


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    """mu <= lam: partial sums of mu never exceed those of lam (same size)."""
    if sum(mu) != sum(lam):
        return False
    n = max(len(mu), len(lam))
    s_mu = s_lam = 0
    for i in range(n):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu > s_lam:
            return False
    return True


def _lex_ordered(n: int) -> list[Partition]:
    """Partitions of n in ascending lex order, a linear extension of dominance."""
    return sorted(all_partitions(n))


# ---------------------------------------------------------------------------
# integer transition matrices between the p and m bases (field independent)
# ---------------------------------------------------------------------------


def _expand(sym: dict, nvars: int) -> dict:
    """Partition-keyed symmetric function -> full monomial dict in nvars."""
    out: dict = {}
    for lam, c in sym.items():
        padded = tuple(lam) + (0,) * (nvars - len(lam))
        for perm in set(itertools.permutations(padded)):
            out[perm] = out.get(perm, 0) + c
    return out


def _collect(expanded: dict) -> dict:
    """Full monomial dict -> partition-keyed coefficients."""
    out = {}
    for key, c in expanded.items():
        if c and tuple(sorted(key, reverse=True)) == key:
            lam = tuple(p for p in key if p)
            out[lam] = c
    return out


def sym_mul(f: dict, g: dict, degree: int) -> dict:
    """Multiply two homogeneous m-basis functions whose degrees sum to degree."""
    fe = _expand(f, degree)
    ge = _expand(g, degree)
    out: dict = {}
    for k1, c1 in fe.items():
        for k2, c2 in ge.items():
            key = tuple(a + b for a, b in zip(k1, k2))
            out[key] = out.get(key, 0) + c1 * c2
    return _collect(out)


@cache
def _power_to_monomial(n: int) -> dict:
    """p_mu in the m basis, as a nested dict keyed by mu, for |mu| = n."""
    out = {}
    for mu in _lex_ordered(n):
        f = {(): 1}
        deg = 0
        for r in mu:
            f = sym_mul(f, {(r,): 1}, deg + r)
            deg += r
        out[mu] = f
    return out


@cache
def _monomial_to_power(n: int) -> dict:
    """m_lam in the p basis with Fraction coefficients, by matrix inversion."""
    parts = _lex_ordered(n)
    index = {lam: i for i, lam in enumerate(parts)}
    p2m = _power_to_monomial(n)
    # rows: p_mu expressed in m; solve for the inverse transition
    a = [[Fraction(p2m[mu].get(nu, 0)) for nu in parts] for mu in parts]
    inv = _invert(a)
    return {lam: {mu: inv[index[lam]][j] for j, mu in enumerate(parts)
                  if inv[index[lam]][j]}
            for lam in parts}


def _invert(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = 1 / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class SymFunc:
    """Graded symmetric function with an explicit basis tag (m, p, or M)."""

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: dict):
        if basis not in ("m", "p", "M"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.coeffs = {lam: c for lam, c in coeffs.items() if c}

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"({c})*{self.basis}_{list(lam)}"
                          for lam, c in sorted(self.coeffs.items()))
        return body or "0"


class MacdonaldContext:
    """Per-field cache of basis data up to a degree cap."""

    def __init__(self, fld, max_degree: int):
        self.fld = fld
        self.max_degree = max_degree
        self._mac_m: dict = {(): {(): fld.one}}
        self._mac_p: dict = {(): {(): fld.one}}
        self._norm: dict = {(): fld.one}
        self._built = 0

    # -- basis conversions --------------------------------------------------

    def m_to_p(self, coeffs: dict) -> dict:
        fld = self.fld
        out: dict = {}
        for lam, c in coeffs.items():
            table = _monomial_to_power(sum(lam))[lam]
            for mu, w in table.items():
                inc = c * fld.from_fraction(w)
                prev = out.get(mu)
                out[mu] = inc if prev is None else prev + inc
        return {mu: c for mu, c in out.items() if c}

    def p_norm_sq(self, mu: Partition):
        """Diagonal value of the inner product on the power-sum basis."""
        fld = self.fld
        z = Fraction(1)
        mult: dict = {}
        for part in mu:
            mult[part] = mult.get(part, 0) + 1
        for n, m in mult.items():
            z *= Fraction(n) ** m
            for k in range(1, m + 1):
                z *= k
        out = fld.from_fraction(z)
        for part in mu:
            out = out * (fld.one - fld.hbar_q(0, part))
            out = out / (fld.one - fld.hbar_q(part, 0))
        return out

    def inner_p(self, f: dict, g: dict):
        fld = self.fld
        out = fld.zero
        for mu, c in f.items():
            w = g.get(mu)
            if w is not None:
                out = out + c * w * self.p_norm_sq(mu)
        return out

    def inner_m(self, f: dict, g: dict):
        return self.inner_p(self.m_to_p(f), self.m_to_p(g))

    # -- Gram-Schmidt oracle tier --------------------------------------------

    def _build(self, degree: int):
        fld = self.fld
        for n in range(self._built + 1, degree + 1):
            for lam in _lex_ordered(n):
                m_rep = {lam: fld.one}
                p_rep = dict(self.m_to_p(m_rep))
                for nu in _lex_ordered(n):
                    if nu == lam:
                        break
                    proj = self.inner_p(p_rep, self._mac_p[nu]) / self._norm[nu]
                    if not proj:
                        continue
                    for key, c in self._mac_m[nu].items():
                        prev = m_rep.get(key, fld.zero)
                        m_rep[key] = prev - proj * c
                    for key, c in self._mac_p[nu].items():
                        prev = p_rep.get(key, fld.zero)
                        p_rep[key] = prev - proj * c
                m_rep = {k: c for k, c in m_rep.items() if c}
                p_rep = {k: c for k, c in p_rep.items() if c}
                norm = self.inner_p(p_rep, p_rep)
                if not norm:
                    raise DegenerateSpecialization(
                        f"Gram matrix singular at {lam}; re-randomize (hbar, q)")
                self._mac_m[lam] = m_rep
                self._mac_p[lam] = p_rep
                self._norm[lam] = norm
            self._built = n

    def macdonald_m(self, lam: Partition) -> dict:
        """The orthogonal basis element, expanded in monomial functions."""
        self._build(sum(lam))
        return self._mac_m[lam]

    def macdonald_p(self, lam: Partition) -> dict:
        self._build(sum(lam))
        return self._mac_p[lam]

    def norm_sq(self, lam: Partition):
        self._build(sum(lam))
        return self._norm[lam]

    def m_to_macdonald(self, coeffs: dict) -> dict:
        """Expand an m-basis function in the orthogonal basis (exact)."""
        fld = self.fld
        rem = {lam: c for lam, c in coeffs.items() if c}
        out: dict = {}
        degrees = sorted({sum(lam) for lam in rem}, reverse=True)
        for n in degrees:
            for lam in reversed(_lex_ordered(n)):
                c = rem.get(lam)
                if not c:
                    continue
                out[lam] = c
                for key, w in self.macdonald_m(lam).items():
                    prev = rem.get(key, fld.zero)
                    rem[key] = prev - c * w
        return {lam: c for lam, c in out.items() if c}

    def convert(self, f: SymFunc, basis: str) -> SymFunc:
        if f.basis == basis:
            return SymFunc(basis, f.coeffs)
        if f.basis == "p":
            m = {}
            fld = self.fld
            for mu, c in f.coeffs.items():
                for nu, w in _power_to_monomial(sum(mu))[mu].items():
                    inc = c * fld.from_int(w)
                    prev = m.get(nu)
                    m[nu] = inc if prev is None else prev + inc
            return self.convert(SymFunc("m", m), basis)
        if f.basis == "M":
            m = {}
            for lam, c in f.coeffs.items():
                for key, w in self.macdonald_m(lam).items():
                    inc = c * w
                    prev = m.get(key)
                    m[key] = inc if prev is None else prev + inc
            return self.convert(SymFunc("m", m), basis)
        # from m
        if basis == "p":
            return SymFunc("p", self.m_to_p(f.coeffs))
        return SymFunc("M", self.m_to_macdonald(f.coeffs))

    def inner_product(self, f: SymFunc, g: SymFunc):
        """Bilinear inner product; both arguments converted to power sums."""
        return self.inner_p(self.convert(f, "p").coeffs,
                            self.convert(g, "p").coeffs)


def macdonald_basis(ctx: MacdonaldContext, max_degree: int) -> list[SymFunc]:
    """All orthogonal basis elements of degree <= max_degree, in m-form."""
    out = []
    for n in range(max_degree + 1):
        for lam in _lex_ordered(n):
            out.append(SymFunc("m", ctx.macdonald_m(lam)))
    return out


# ---------------------------------------------------------------------------
# closed-form Pieri tier
# ---------------------------------------------------------------------------


def pieri_c(fld, mu: Partition, lam: Partition):
    """Raising coefficient for mu interlacing lam from above."""
    if not interlaces(mu, lam):
        raise NotInterlacing(f"{mu} does not interlace {lam} from above")
    n = len(mu)

    def m_(i):
        return mu[i - 1] if i <= len(mu) else 0

    def l_(i):
        return lam[i - 1] if i <= len(lam) else 0

    out = fld.one
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out = out * qpoch(fld, fld.hbar_q(j - i + 1, 0), m_(i) - l_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i, 1), m_(i) - l_(j))
            out = out * qpoch(fld, fld.hbar_q(j - i, 1), m_(i) - m_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i + 1, 0), m_(i) - m_(j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * qpoch(fld, fld.hbar_q(j - i, 0), l_(i) - m_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i - 1, 1), l_(i) - m_(j))
            out = out * qpoch(fld, fld.hbar_q(j - i - 1, 1), l_(i) - l_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i, 0), l_(i) - l_(j))
    return out


def pieri_d(fld, lam: Partition, mu: Partition):
    """Lowering coefficient for mu interlaced by lam from above."""
    if not interlaces(lam, mu):
        raise NotInterlacing(f"{mu} is not interlaced by {lam}")
    n = len(lam)

    def m_(i):
        return mu[i - 1] if i <= len(mu) else 0

    def l_(i):
        return lam[i - 1] if i <= len(lam) else 0

    out = fld.one
    for i in range(1, n + 1):
        out = out * qpoch(fld, fld.hbar_q(n - i + 1, 0), m_(i))
        out = out / qpoch(fld, fld.hbar_q(n - i, 1), m_(i))
        out = out * qpoch(fld, fld.hbar_q(n - i, 1), l_(i))
        out = out / qpoch(fld, fld.hbar_q(n - i + 1, 0), l_(i))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            out = out * qpoch(fld, fld.hbar_q(j - i + 1, 0), l_(i) - m_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i, 1), l_(i) - m_(j))
            out = out * qpoch(fld, fld.hbar_q(j - i, 1), m_(i) - m_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i + 1, 0), m_(i) - m_(j))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * qpoch(fld, fld.hbar_q(j - i - 1, 1), l_(i) - l_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i, 0), l_(i) - l_(j))
            out = out * qpoch(fld, fld.hbar_q(j - i, 0), m_(i) - l_(j))
            out = out / qpoch(fld, fld.hbar_q(j - i - 1, 1), m_(i) - l_(j))
    return out


# ---------------------------------------------------------------------------
# half vertex operators on graded Fock vectors
# ---------------------------------------------------------------------------
#
# A FockVector is a dict mapping (partition, grading) -> coefficient, where
# the grading is a sorted tuple of (symbol, exponent) pairs recording formal
# token powers (z indices for the matrix element, letters for the
# commutation check).


def _grade_mul(g: tuple, sym, exp: int) -> tuple:
    if sym is None or exp == 0:
        return g
    return zkey_mul(g, ((sym, exp),))


def gamma_plus(fld, vec: dict, sym=None, max_size: int | None = None,
               degree_cap: int | None = None) -> dict:
    """Raising half vertex operator; token powers record the size gain."""
    out: dict = {}
    for (lam, grade), c in vec.items():
        budget = max_size - sum(lam) if max_size is not None else None
        if degree_cap is not None:
            room = degree_cap - zkey_deg(grade) - sum(lam)
            budget = room if budget is None else min(budget, room)
        if budget is None:
            raise ValueError("gamma_plus needs max_size or degree_cap")
        if budget < 0:
            continue
        for mu in partitions_above(lam, budget):
            coeff = c * pieri_c(fld, mu, lam)
            if not coeff:
                continue
            key = (mu, _grade_mul(grade, sym, sum(mu) - sum(lam)))
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
    return {k: v for k, v in out.items() if v}


def gamma_minus(fld, vec: dict, sym=None) -> dict:
    """Lowering half vertex operator; token powers record the size drop."""
    out: dict = {}
    for (lam, grade), c in vec.items():
        for mu in partitions_below(lam):
            coeff = c * pieri_d(fld, lam, mu)
            if not coeff:
                continue
            key = (mu, _grade_mul(grade, sym, sum(mu) - sum(lam)))
            prev = out.get(key)
            out[key] = coeff if prev is None else prev + coeff
    return {k: v for k, v in out.items() if v}


def z_l(fld, vec: dict, sym, scalar) -> dict:
    """Grading operator: multiplies each component by token^size, with an
    extra scalar^size folded into the coefficient."""
    out = {}
    for (lam, grade), c in vec.items():
        n = sum(lam)
        out[(lam, _grade_mul(grade, sym, n))] = c * scalar**n
    return out


def matrix_element(fld, lam: Partition, cap: int) -> TruncatedSeries:
    """Vacuum expectation of the column word, as a truncated z-series.

    One operator pair per nonzero column, applied right to left: a raising or
    lowering step according to the boundary slope, then the shifted grading
    operator of that column.  The vacuum component at the end collects the
    series.
    """
    lo, hi = profile_span(lam)
    if hi < lo:
        return TruncatedSeries.one(cap, fld)
    vec = {((), ()): fld.one}
    for i in range(hi, lo - 1, -1):
        if tau(lam, i) > 0:
            vec = gamma_plus(fld, vec, sym=None, degree_cap=cap)
        else:
            vec = gamma_minus(fld, vec, sym=None)
        vec = z_l(fld, vec, i, fld.hq(sigma_hat(lam, i)))
        vec = {(p, g): c for (p, g), c in vec.items() if zkey_deg(g) <= cap}
    vec = gamma_minus(fld, vec, sym=None)
    terms = {g: c for (p, g), c in vec.items() if p == ()}
    return TruncatedSeries(cap, terms)


# ---------------------------------------------------------------------------
# commutation report
# ---------------------------------------------------------------------------


def scalar_series_times(fld, vec: dict, order: int) -> dict:
    """Multiply a Fock vector by sum_d (hbar)_d/(q)_d (w/z)^d, truncated."""
    out: dict = {}
    for d in range(order + 1):
        coeff = qpoch(fld, fld.hbar, d) / qpoch(fld, fld.q, d)
        for (lam, grade), c in vec.items():
            g = _grade_mul(_grade_mul(grade, "w", d), "z", -d)
            key = (lam, g)
            inc = c * coeff
            prev = out.get(key)
            out[key] = inc if prev is None else prev + inc
    return {k: v for k, v in out.items() if v}


def commutation_check(fld, order: int, starts=((), (1,))) -> list:
    """Compare both operator orderings on the given start vectors.

    Returns a list of mismatch records; empty means the two sides agree on
    every component of size at most |start| + order, through token order
    (w/z)^order.
    """
    mismatches = []
    for start in starts:
        end_cap = sum(start) + order
        vec0 = {(start, ()): fld.one}
        lhs = gamma_minus(fld, gamma_plus(fld, vec0, sym="w",
                                          max_size=end_cap + order), sym="z")
        rhs = gamma_plus(fld, gamma_minus(fld, vec0, sym="z"), sym="w",
                         max_size=end_cap)
        rhs = scalar_series_times(fld, rhs, order)

        def included(key):
            lam, grade = key
            g = dict(grade)
            drop = -g.get("z", 0)
            return sum(lam) <= end_cap and 0 <= drop <= order

        keys = {k for k in lhs if included(k)} | {k for k in rhs if included(k)}
        for key in sorted(keys):
            a = lhs.get(key, fld.zero)
            b = rhs.get(key, fld.zero)
            if a != b:
                mismatches.append({"start": start, "component": key[0],
                                   "grading": key[1], "lhs": a, "rhs": b})
    return mismatches
