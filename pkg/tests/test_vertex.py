from fractions import Fraction

from hypothesis import given, settings

from quivertex.partitions import (
    enumerate_interlacing,
    partitions_up_to,
    profile_span,
)
from quivertex.scalars import SpecializedField
from quivertex.series import TruncatedSeries, qpoch
from quivertex.vertex import (
    coeff_alpha,
    coeff_beta,
    coeff_delta,
    coeff_epsilon,
    coeff_gamma,
    zfun_product,
    zfun_raw_sum,
    zfun_sum,
)

from conftest import partition_strategy


# -- coefficient building blocks ----------------------------------------------


def test_trivial_coefficients(fld):
    assert coeff_alpha(fld, (), 1) == fld.one
    assert coeff_beta(fld, (), (), 0, 1, 1) == fld.one
    assert coeff_gamma(fld, (), 1) == fld.one


def test_alpha_single_column_is_qbinomial_coefficient(fld):
    for d in range(5):
        part = (d,) if d else ()
        assert coeff_alpha(fld, part, 1) == \
            qpoch(fld, fld.hbar, d) / qpoch(fld, fld.q, d)


def test_beta_matches_inverted_form(fld):
    # rewrite with all Pochhammer indices nonnegative, for i >= 0 columns:
    # pairs with a nonpositive difference flip through
    # (hbar x)_{-n}/(q x)_{-n} = (q/hbar)^n (1/x)_n / ((q/hbar)(1/x))_n
    cases = [
        ((), (1,), 0, 1, 1),
        ((1,), (2,), 0, 1, 1),
        ((2, 1), (1,), 0, 2, 1),
        ((3, 1), (2,), 0, 2, 1),
    ]
    for left, right, i, vi, vi1 in cases:
        sigma = vi - vi1
        direct = coeff_beta(fld, left, right, i, vi, vi1)
        flipped = fld.one
        for j in range(1, vi + 1):
            lj = left[j - 1] if j <= len(left) else 0
            for k in range(1, vi1 + 1):
                rk = right[k - 1] if k <= len(right) else 0
                d = rk - lj
                num = fld.hbar_q(j - k + 1 - sigma, 0)
                den = fld.hbar_q(j - k - sigma, 1)
                if d >= 0:
                    flipped = flipped * qpoch(fld, num, d) / qpoch(fld, den, d)
                else:
                    x = num / fld.hbar  # num = hbar * x, den = q * x
                    qh = fld.q / fld.hbar
                    flipped = flipped * qh ** (-d) \
                        * qpoch(fld, fld.one / x, -d) / qpoch(fld, qh / x, -d)
        assert direct == flipped, (left, right)


@given(lam=partition_strategy(max_n=5))
@settings(max_examples=40, deadline=None)
def test_gamma_delta_epsilon_decomposition(lam):
    fld = SpecializedField(Fraction(3, 7), Fraction(2, 9))
    vi = max(len(lam), 1) + 1  # deliberately padded column
    gamma = coeff_gamma(fld, lam, vi)
    delta = coeff_delta(fld, lam, vi)
    eps = coeff_epsilon(fld, lam, vi)
    power = 0
    for j in range(1, vi + 1):
        pj = lam[j - 1] if j <= len(lam) else 0
        for k in range(j, vi + 1):
            pk = lam[k - 1] if k <= len(lam) else 0
            power += pj - pk
    assert gamma == delta * eps * fld.hq(power)


# -- the three routes ----------------------------------------------------------


def test_empty_diagram_routes(fld):
    one = TruncatedSeries.one(4, fld)
    assert zfun_product(fld, (), 4) == one
    assert zfun_sum(fld, (), 4) == one
    assert zfun_raw_sum(fld, (), 4) == one


def test_single_box_is_qbinomial(fld):
    series = zfun_product(fld, (1,), 6)
    for d in range(7):
        key = ((0, d),) if d else ()
        assert series.terms[key] == qpoch(fld, fld.hbar, d) / qpoch(fld, fld.q, d)


def test_three_route_agreement_small(fields):
    for fld in fields:
        for lam in partitions_up_to(4):
            p = zfun_product(fld, lam, 3)
            assert zfun_sum(fld, lam, 3) == p
            assert zfun_raw_sum(fld, lam, 3) == p


def test_two_by_two_raw_matches_product(fld):
    assert zfun_raw_sum(fld, (2, 2), 3) == zfun_product(fld, (2, 2), 3)


def test_vertical_strip_sum_matches_raw(fld):
    assert zfun_sum(fld, (1, 1), 2) == zfun_raw_sum(fld, (1, 1), 2)


def test_symbolic_routes_tiny(sym):
    for lam in [(1,), (2,), (1, 1)]:
        assert zfun_product(sym, lam, 2) == zfun_sum(sym, lam, 2)


def test_constant_term_is_one(fld):
    for lam in partitions_up_to(4):
        assert zfun_product(fld, lam, 2).terms[()] == fld.one


def test_support_realized_by_interlacing_tuples(fld):
    for lam in partitions_up_to(4):
        if not lam:
            continue
        lo, _ = profile_span(lam)
        series = zfun_product(fld, lam, 3)
        realizable = set()
        for tup in enumerate_interlacing(lam, 3):
            key = tuple((lo + idx, sum(p)) for idx, p in enumerate(tup) if sum(p))
            realizable.add(key)
        assert set(series.terms) <= realizable


def test_q_difference_equation_single_box(fld):
    # (1 - z) Z(z) = (1 - hbar z) Z(qz): the infinite product loses exactly
    # its leading factor under z -> qz
    cap = 6
    series = zfun_product(fld, (1,), cap)
    shifted = TruncatedSeries(cap, {
        key: c * fld.hbar_q(0, key[0][1] if key else 0)
        for key, c in series.terms.items()})
    one_minus_z = TruncatedSeries(cap, {(): fld.one, ((0, 1),): -fld.one})
    one_minus_hz = TruncatedSeries(cap, {(): fld.one, ((0, 1),): -fld.hbar})
    assert one_minus_z * series == one_minus_hz * shifted
