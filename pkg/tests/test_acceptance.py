"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a single PASS/FAIL line (run with -s to see them inline).
All arithmetic is exact rational, so there are no tolerances anywhere.
"""

import random

from quivertex.partitions import all_partitions, column_profile, dim_formula, \
    partitions_up_to
from quivertex.quiver import diagram_character, enumerate_fixed_points, \
    mirror_tangent_character
from quivertex.scalars import default_field, random_field
from quivertex.series import TruncatedSeries, ZMonomial, qpoch
from quivertex.verify import (
    FIG_POINT,
    FIG_SPEC,
    run_anquiver,
    run_commutation,
    run_hook,
    run_lemma,
    run_macdonald,
)
from quivertex.vertex import zfun_product

SEED = 20260810


def _announce(num, name, passed):
    print(f"ACCEPTANCE {num} ({name}): {'PASS' if passed else 'FAIL'}")
    assert passed


def test_criterion_1_hook_product_all_routes():
    # |lambda| <= 5 at degree 4 plus the staircase spot case at degree 3,
    # product == sum == raw (raw capped at 3) == matrix element,
    # at 3 distinct random rational points
    reports = run_hook(max_size=5, degree=4, points=3, seed=SEED, spot=True)
    passed = bool(reports) and all(r.passed for r in reports)
    _announce(1, "hook product, four routes", passed)


def test_criterion_2_qbinomial_coefficients():
    # one-box series coefficients are (hbar)_d / (q)_d for d <= 6; this is
    # the series whose product starts at the constant factor, settling the
    # product-start question
    rng = random.Random(SEED)
    passed = True
    for fld in [default_field(), random_field(rng), random_field(rng)]:
        series = zfun_product(fld, (1,), 6)
        for d in range(7):
            key = ((0, d),) if d else ()
            want = qpoch(fld, fld.hbar, d) / qpoch(fld, fld.q, d)
            passed = passed and series.terms.get(key, fld.zero) == want
    _announce(2, "q-binomial coefficients to degree 6", passed)


def test_criterion_3_macdonald_suite():
    # Gram-Schmidt orthogonality and dominance triangularity to degree 4,
    # Pieri expansions for n + |lambda| <= 4, lowering rule closed form
    # against the norm-ratio route, and adjointness on all basis pairs
    reports = run_macdonald(points=2, seed=SEED, degree=4)
    passed = bool(reports) and all(r.passed for r in reports)
    _announce(3, "Macdonald suite to degree 4", passed)


def test_criterion_4_commutation_relation():
    reports = run_commutation(points=2, seed=SEED, order=5)
    passed = bool(reports) and all(r.passed for r in reports)
    _announce(4, "operator commutation to order 5", passed)


def test_criterion_5_interlacing_lemma():
    reports = run_lemma(max_size=5, max_entry=3)
    passed = all(r.passed for r in reports)
    _announce(5, "boundary bookkeeping identity, exhaustive", passed)


def test_criterion_6_zero_dimensionality():
    passed = all(dim_formula(column_profile(lam)) == 0
                 for n in range(9) for lam in all_partitions(n))
    _announce(6, "dimension formula vanishes on all profiles to size 8", passed)


def test_criterion_7_chamber_factorization():
    # the figure point plus every 2-framing point with at most 4 boxes on
    # the 2- and 3-vertex quivers, both chamber orders, degree 2, 2 points
    reports = run_anquiver(points=2, seed=SEED, degree=2, max_boxes=4,
                           ranks=(2, 3), num_units=2, include_figure=True)
    passed = bool(reports) and all(r.passed for r in reports)
    _announce(7, "chamber limits factor through single diagrams", passed)


def test_criterion_8_mirror_character():
    passed = True
    # every fixed point from the factorization sweep
    jobs = [(FIG_SPEC, FIG_POINT)]
    for n in (2, 3):
        jobs.extend(enumerate_fixed_points(n, 2, 4))
    for spec, point in jobs:
        char = mirror_tangent_character(spec, point)
        passed = passed and len(char) == 2 * point.total_boxes
        inv = sorted((m.inverse() for m in char), key=ZMonomial.sort_key)
        passed = passed and list(inv) == list(char)
    # single diagrams up to size 5, in content coordinates
    for lam in partitions_up_to(5):
        char = diagram_character(lam)
        passed = passed and len(char) == 2 * sum(lam)
        inv = sorted((m.inverse() for m in char), key=ZMonomial.sort_key)
        passed = passed and list(inv) == list(char)
    # the staircase carries the long hook monomial and its inverse
    char = diagram_character((5, 4, 3, 2))
    hook = ZMonomial.from_exps({0: 1, 1: 1, 2: 1, 3: 1})
    passed = passed and len(char) == 28
    passed = passed and hook in char and hook.inverse() in char
    _announce(8, "mirror tangent character", passed)


def test_criterion_9_q_difference_property():
    # (1 - z) Z(z) = (1 - hbar z) Z(qz) to degree 6; the relation the hook
    # product imposes on the one-box series
    rng = random.Random(SEED)
    passed = True
    for fld in [default_field(), random_field(rng)]:
        cap = 6
        series = zfun_product(fld, (1,), cap)
        shifted = TruncatedSeries(cap, {
            key: c * fld.hbar_q(0, key[0][1] if key else 0)
            for key, c in series.terms.items()})
        one_minus_z = TruncatedSeries(cap, {(): fld.one, ((0, 1),): -fld.one})
        one_minus_hz = TruncatedSeries(cap, {(): fld.one, ((0, 1),): -fld.hbar})
        passed = passed and one_minus_z * series == one_minus_hz * shifted
    _announce(9, "q-difference property of the one-box series", passed)
