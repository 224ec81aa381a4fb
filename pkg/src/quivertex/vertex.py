"""Quasimap count series of a single diagram by independent routes.

Three evaluations of the same series: the closed hook product
(``zfun_product``), the reduced sum over interlacing tuples (``zfun_sum``),
and the unreduced lattice sum with one nonnegative index per box
(``zfun_raw_sum``).  The raw sum is the slow desk-check oracle; terms outside
the interlacing locus vanish through exact Pochhammer bookkeeping rather
than being skipped.
"""

from __future__ import annotations

from .partitions import (
    Partition,
    column_profile,
    enumerate_interlacing,
    l_char,
    profile_span,
)
from .series import TruncatedSeries, pleth_exp, poch_ratio_product, qpoch


def zfun_product(fld, lam: Partition, cap: int) -> TruncatedSeries:
    """Hook-product route: plethystic exponential over the hook monomials."""
    return pleth_exp(fld, l_char(lam), cap)


def coeff_alpha(fld, part: Partition, v0: int):
    """Framing-column coefficient; the single-column case is the q-binomial.

    The product ranges over all v0 slots of the column, parts padded by
    zeros.  Using the true column count (not the number of nonzero parts) is
    forced by matching the lattice sum when the column is not full.
    """
    out = fld.one
    for j in range(1, v0 + 1):
        d = part[j - 1] if j <= len(part) else 0
        out = out * qpoch(fld, fld.hbar_q(v0 - j + 1, 0), d)
        out = out / qpoch(fld, fld.hbar_q(v0 - j, 1), d)
    return out


def coeff_beta(fld, left: Partition, right: Partition, i: int, vi: int, vi1: int):
    """Cross-column coefficient between columns i and i+1."""
    sigma = vi - vi1
    shift = 1 - sigma if i >= 0 else -sigma
    out = fld.one
    for j in range(1, vi + 1):
        lj = left[j - 1] if j <= len(left) else 0
        for k in range(1, vi1 + 1):
            rk = right[k - 1] if k <= len(right) else 0
            d = rk - lj
            out = out * qpoch(fld, fld.hbar_q(j - k + shift, 0), d)
            out = out / qpoch(fld, fld.hbar_q(j - k + shift - 1, 1), d)
    return out


def coeff_gamma(fld, part: Partition, vi: int):
    """Within-column coefficient over all ordered slot pairs."""
    out = fld.one
    for j in range(1, vi + 1):
        pj = part[j - 1] if j <= len(part) else 0
        for k in range(1, vi + 1):
            pk = part[k - 1] if k <= len(part) else 0
            d = pk - pj
            out = out * qpoch(fld, fld.hbar_q(j - k, 1), d)
            out = out / qpoch(fld, fld.hbar_q(j - k + 1, 0), d)
    return out


def coeff_delta(fld, part: Partition, vi: int):
    """Strictly lower-triangular half of the within-column coefficient."""
    out = fld.one
    for k in range(1, vi + 1):
        pk = part[k - 1] if k <= len(part) else 0
        for j in range(k + 1, vi + 1):
            pj = part[j - 1] if j <= len(part) else 0
            d = pk - pj
            out = out * qpoch(fld, fld.hbar_q(j - k, 1), d)
            out = out / qpoch(fld, fld.hbar_q(j - k + 1, 0), d)
    return out


def coeff_epsilon(fld, part: Partition, vi: int):
    """Upper-triangular half after the inversion identity is applied."""
    out = fld.one
    for j in range(1, vi + 1):
        pj = part[j - 1] if j <= len(part) else 0
        for k in range(j, vi + 1):
            pk = part[k - 1] if k <= len(part) else 0
            d = pj - pk
            out = out * qpoch(fld, fld.hbar_q(k - j - 1, 1), d)
            out = out / qpoch(fld, fld.hbar_q(k - j, 0), d)
    return out


def zfun_sum(fld, lam: Partition, cap: int) -> TruncatedSeries:
    """Reduced-sum route over interlacing tuples, grouped by z-exponent."""
    lo, hi = profile_span(lam)
    if hi < lo:
        return TruncatedSeries.one(cap, fld)
    v = column_profile(lam)
    terms: dict = {}
    for tup in enumerate_interlacing(lam, cap):
        coeff = coeff_alpha(fld, tup[-lo], v[0])
        for idx in range(hi - lo):
            i = lo + idx
            coeff = coeff * coeff_beta(fld, tup[idx], tup[idx + 1], i,
                                       v[i], v[i + 1])
        for idx in range(hi - lo + 1):
            coeff = coeff * coeff_gamma(fld, tup[idx], v[lo + idx])
        key = tuple((lo + idx, sum(p)) for idx, p in enumerate(tup) if sum(p))
        prev = terms.get(key)
        terms[key] = coeff if prev is None else prev + coeff
    return TruncatedSeries(cap, terms)


def zfun_raw_sum(fld, lam: Partition, cap: int) -> TruncatedSeries:
    """Unreduced lattice sum: one nonnegative summation index per box.

    Terms outside the interlacing locus vanish exactly through the net
    vanishing-order bookkeeping of poch_ratio_product; nothing is skipped by
    combinatorial shortcuts.
    """
    lo, hi = profile_span(lam)
    if hi < lo:
        return TruncatedSeries.one(cap, fld)
    v = column_profile(lam)
    cols = list(range(lo, hi + 1))
    slots = [(i, j) for i in cols for j in range(1, v[i] + 1)]
    terms: dict = {}
    for total in range(cap + 1):
        for combo in _compositions(total, len(slots)):
            d = {slot: combo[t] for t, slot in enumerate(slots)}
            ratios = []
            for j in range(1, v[0] + 1):
                if d[(0, j)]:
                    ratios.append((fld.hbar_q(j, 0), fld.hbar_q(j - 1, 1),
                                   d[(0, j)]))
            for i in cols:
                if i + 1 not in v:
                    continue
                shift = 1 if i >= 0 else 0
                for j in range(1, v[i] + 1):
                    for k in range(1, v[i + 1] + 1):
                        delta = d[(i + 1, k)] - d[(i, j)]
                        if delta:
                            ratios.append((fld.hbar_q(k - j + shift, 0),
                                           fld.hbar_q(k - j + shift - 1, 1),
                                           delta))
            for i in cols:
                for j in range(1, v[i] + 1):
                    for k in range(1, v[i] + 1):
                        delta = d[(i, k)] - d[(i, j)]
                        if delta:
                            ratios.append((fld.hbar_q(k - j, 1),
                                           fld.hbar_q(k - j + 1, 0), delta))
            coeff = poch_ratio_product(fld, ratios)
            if not coeff:
                continue
            exps: dict = {}
            for (i, _), val in d.items():
                if val:
                    exps[i] = exps.get(i, 0) + val
            key = tuple(sorted(exps.items()))
            prev = terms.get(key)
            terms[key] = coeff if prev is None else prev + coeff
    return TruncatedSeries(cap, terms)


def _compositions(total: int, parts: int):
    """All ways to write total as an ordered tuple of `parts` nonnegatives."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
