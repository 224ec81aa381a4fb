"""Cross-route verification suites.

Each runner exercises one family of identities at caller-chosen bounds and
returns a list of reports; a failing report carries a concrete witness (the
first mismatching coefficient with both values).  Suites fan out over
(diagram, degree, point) jobs and merge reports in job order, so output is
deterministic for a fixed seed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .macdonald import (
    MacdonaldContext,
    SymFunc,
    commutation_check,
    gamma_minus,
    gamma_plus,
    matrix_element,
    pieri_c,
    pieri_d,
    sym_mul,
)
from .partitions import (
    all_partitions,
    column_profile,
    dim_formula,
    enumerate_interlacing,
    lemma_sum,
    partition_str,
    partitions_above,
    partitions_up_to,
)
from .quiver import (
    Chamber,
    FixedPoint,
    QuiverSpec,
    chamber_limit_oracle,
    enumerate_fixed_points,
    mirror_tangent_character,
    vertex_limit_factorized,
)
from .scalars import random_field
from .series import qpoch
from .vertex import zfun_product, zfun_raw_sum, zfun_sum

FIG_SPEC = QuiverSpec(4, False, (1, 3, 2, 1), (0, 1, 1, 0))
FIG_POINT = FixedPoint.of((1, (2, 2)), (2, (2, 1)))
SPOT_DIAGRAM = (5, 4, 3, 2)


@dataclass
class Report:
    check: str
    params: dict
    passed: bool
    witness: dict | None = None
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  witness={self.witness}" if self.witness else ""
        return f"[{status}] {self.check} {self.params}{extra} ({self.seconds:.2f}s)"


def _series_witness(a, b) -> dict | None:
    keys = sorted(set(a.terms) | set(b.terms))
    for key in keys:
        ca = a.terms.get(key)
        cb = b.terms.get(key)
        if ca != cb:
            return {"z": dict(key), "lhs": str(ca), "rhs": str(cb)}
    return None


def _timed(check: str, params: dict, fn) -> Report:
    t0 = time.time()
    passed, witness = fn()
    return Report(check, params, passed, witness, time.time() - t0)


def make_fields(points: int, seed: int) -> list[SpecializedField]:
    rng = random.Random(seed)
    return [random_field(rng) for _ in range(points)]


def run_hook(max_size: int = 5, degree: int = 4, points: int = 3, seed: int = 0,
             raw_degree: int = 3, spot: bool = True) -> list[Report]:
    """All-route agreement: product, reduced sum, raw sum, matrix element."""
    fields = make_fields(points, seed)
    # max_size 0 is the vacuous run: no diagrams, no checks
    jobs = [(lam, degree) for lam in partitions_up_to(max_size) if lam or max_size]
    if spot and max_size > 0:
        jobs.append((SPOT_DIAGRAM, min(degree, 3)))
    out = []
    for lam, cap in jobs:
        for fld in fields:
            def compare(lam=lam, cap=cap, fld=fld):
                base = zfun_product(fld, lam, cap)
                for name, fn in (("sum", zfun_sum), ("macdonald", matrix_element)):
                    other = fn(fld, lam, cap)
                    if other != base:
                        return False, {"route": name} | (_series_witness(base, other) or {})
                raw_cap = min(cap, raw_degree)
                raw = zfun_raw_sum(fld, lam, raw_cap)
                trimmed = zfun_product(fld, lam, raw_cap)
                if raw != trimmed:
                    return False, {"route": "raw"} | (_series_witness(trimmed, raw) or {})
                return True, None

            out.append(_timed(
                "hook-product-all-routes",
                {"lambda": partition_str(lam) or "empty", "degree": cap,
                 "hbar": str(fld.hbar_value), "q": str(fld.q_value)},
                compare))
    return out


def run_macdonald(points: int = 2, seed: int = 0, degree: int = 4) -> list[Report]:
    """Orthogonality, triangularity, Pieri, lowering rule, adjointness."""
    out = []
    for fld in make_fields(points, seed):
        ctx = MacdonaldContext(fld, degree)
        params = {"degree": degree, "hbar": str(fld.hbar_value),
                  "q": str(fld.q_value)}

        def orth():
            parts = list(partitions_up_to(degree))
            for a in parts:
                for b in parts:
                    if a == b:
                        continue
                    ip = ctx.inner_product(SymFunc("M", {a: fld.one}),
                                           SymFunc("M", {b: fld.one}))
                    if ip:
                        return False, {"pair": [list(a), list(b)], "value": str(ip)}
            return True, None

        def tri():
            from .macdonald import dominance_leq
            for lam in partitions_up_to(degree):
                rep = ctx.macdonald_m(lam)
                if rep.get(lam) != fld.one:
                    return False, {"lambda": list(lam), "diag": str(rep.get(lam))}
                for mu in rep:
                    if not dominance_leq(mu, lam):
                        return False, {"lambda": list(lam), "mu": list(mu)}
            return True, None

        def pieri():
            for n in range(1, degree + 1):
                for lam in partitions_up_to(degree - n):
                    prod = sym_mul(ctx.macdonald_m((n,)), ctx.macdonald_m(lam),
                                   n + sum(lam))
                    got = ctx.m_to_macdonald(prod)
                    scale = qpoch(fld, fld.q, n) / qpoch(fld, fld.hbar, n)
                    want = {mu: scale * pieri_c(fld, mu, lam)
                            for mu in partitions_above(lam, n)
                            if sum(mu) - sum(lam) == n}
                    want = {k: v for k, v in want.items() if v}
                    if got != want:
                        return False, {"n": n, "lambda": list(lam)}
            return True, None

        def lowering():
            from .partitions import partitions_below
            for lam in partitions_up_to(degree):
                for mu in partitions_below(lam):
                    closed = pieri_d(fld, lam, mu)
                    ratio = (ctx.norm_sq(lam) / ctx.norm_sq(mu)) * pieri_c(fld, lam, mu)
                    if closed != ratio:
                        return False, {"lambda": list(lam), "mu": list(mu),
                                       "closed": str(closed), "ratio": str(ratio)}
            return True, None

        def adjoint():
            basis = list(partitions_up_to(degree))
            for a in basis:
                for b in basis:
                    va = gamma_plus(fld, {(a, ()): fld.one}, max_size=degree)
                    lhs = sum((c * ctx.inner_product(SymFunc("M", {p: fld.one}),
                                                     SymFunc("M", {b: fld.one}))
                               for (p, _), c in va.items()), fld.zero)
                    vb = gamma_minus(fld, {(b, ()): fld.one})
                    rhs = sum((c * ctx.inner_product(SymFunc("M", {a: fld.one}),
                                                     SymFunc("M", {p: fld.one}))
                               for (p, _), c in vb.items()), fld.zero)
                    if lhs != rhs:
                        return False, {"pair": [list(a), list(b)],
                                       "lhs": str(lhs), "rhs": str(rhs)}
            return True, None

        out.append(_timed("macdonald-orthogonality", params, orth))
        out.append(_timed("macdonald-triangularity", params, tri))
        out.append(_timed("macdonald-pieri", params, pieri))
        out.append(_timed("macdonald-lowering-rule", params, lowering))
        out.append(_timed("macdonald-adjointness", params, adjoint))
    return out


def run_lemma(max_size: int = 5, max_entry: int = 3) -> list[Report]:
    """Exhaustive check of the boundary-bookkeeping identity."""

    def check():
        for lam in partitions_up_to(max_size):
            if not lam:
                continue
            bound = max_entry * sum(column_profile(lam).values())
            for tup in enumerate_interlacing(lam, bound):
                if any(p and p[0] > max_entry for p in tup):
                    continue
                lhs, rhs = lemma_sum(lam, tup)
                if lhs != rhs:
                    return False, {"lambda": list(lam),
                                   "tuple": [list(p) for p in tup],
                                   "lhs": lhs, "rhs": rhs}
        return True, None

    return [_timed("interlacing-lemma",
                   {"max_size": max_size, "max_entry": max_entry}, check)]


def run_commutation(points: int = 2, seed: int = 0, order: int = 5) -> list[Report]:
    out = []
    for fld in make_fields(points, seed):
        def check(fld=fld):
            mm = commutation_check(fld, order)
            if mm:
                m = mm[0]
                return False, {"start": list(m["start"]),
                               "component": list(m["component"]),
                               "lhs": str(m["lhs"]), "rhs": str(m["rhs"])}
            return True, None

        out.append(_timed("vertex-operator-commutation",
                          {"order": order, "hbar": str(fld.hbar_value),
                           "q": str(fld.q_value)}, check))
    return out


def run_dim(max_size: int = 8) -> list[Report]:
    def check():
        for n in range(max_size + 1):
            for lam in all_partitions(n):
                d = dim_formula(column_profile(lam))
                if d != 0:
                    return False, {"lambda": list(lam), "dim": d}
        return True, None

    return [_timed("zero-dimensionality", {"max_size": max_size}, check)]


def run_anquiver(points: int = 2, seed: int = 0, degree: int = 2,
                 max_boxes: int = 4, ranks=(2, 3), num_units: int = 2,
                 include_figure: bool = True) -> list[Report]:
    """Factorized chamber limits against the direct fixed-point oracle."""
    fields = make_fields(points, seed)
    jobs = []
    if include_figure:
        jobs.append((FIG_SPEC, FIG_POINT))
    for n in ranks:
        jobs.extend(enumerate_fixed_points(n, num_units, max_boxes))
    out = []
    for spec, point in jobs:
        chambers = [Chamber(tuple(range(len(point.units))))]
        if len(point.units) > 1:
            chambers.append(chambers[0].reversed())
        for chamber in chambers:
            for fld in fields:
                def check(spec=spec, point=point, chamber=chamber, fld=fld):
                    fact = vertex_limit_factorized(fld, spec, point, chamber, degree)
                    orac = chamber_limit_oracle(fld, spec, point, chamber, degree)
                    if fact != orac:
                        return False, _series_witness(fact, orac)
                    return True, None

                out.append(_timed(
                    "chamber-factorization",
                    {"n": spec.n, "units": [[b, list(l)] for b, l in point.units],
                     "chamber": list(chamber.order), "degree": degree,
                     "hbar": str(fld.hbar_value), "q": str(fld.q_value)},
                    check))
    return out


def run_mirror(max_size: int = 5, max_boxes: int = 4, ranks=(2, 3),
               num_units: int = 2, include_figure: bool = True) -> list[Report]:
    """Mirror character sanity: size, inversion closure, spot hook value."""
    jobs = []
    if include_figure:
        jobs.append((FIG_SPEC, FIG_POINT))
    for n in ranks:
        jobs.extend(enumerate_fixed_points(n, num_units, max_boxes))
    wide = 2 * max_size
    for lam in partitions_up_to(max_size):
        point = FixedPoint.of((wide // 2, lam))
        jobs.append((QuiverSpec(wide + 2, False), point))
    out = []
    for spec, point in jobs:
        def check(spec=spec, point=point):
            char = mirror_tangent_character(spec, point)
            if len(char) != 2 * point.total_boxes:
                return False, {"count": len(char),
                               "expected": 2 * point.total_boxes}
            inv = sorted((m.inverse() for m in char), key=lambda m: m.sort_key())
            if list(inv) != list(char):
                return False, {"reason": "not inversion closed"}
            return True, None

        out.append(_timed("mirror-character",
                          {"n": spec.n,
                           "units": [[b, list(l)] for b, l in point.units]},
                          check))
    return out


SUITES = {
    "hook": run_hook,
    "macdonald": run_macdonald,
    "lemma": run_lemma,
    "commutation": run_commutation,
    "dim": run_dim,
    "anquiver": run_anquiver,
    "mirror": run_mirror,
}
