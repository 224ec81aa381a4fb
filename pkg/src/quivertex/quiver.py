"""Finite and affine A-type quiver fixed points and chamber limits.

A fixed point is a tuple of framed partitions, one per framing unit; the box
with coordinates (row, col) of a partition based at vertex b sits over vertex
b + row - col and carries the equivariant weight a * hbar^(col - 1), which
reduces to the standard single-framing assignment.  A chamber is a strict
total order on the framing units; limits are taken exactly, by integer
weight bookkeeping on Pochhammer arguments, never numerically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import InvalidFixedPoint, UnresolvedLimit
from .partitions import (
    Partition,
    as_partition,
    boxes,
    hook_contents,
    partitions_up_to,
)
from .series import TruncatedSeries, ZMonomial, poch_ratio_product
from .vertex import _compositions, zfun_product


@dataclass(frozen=True)
class QuiverSpec:
    n: int
    affine: bool = False
    v: tuple = ()
    w: tuple = ()

    def fold(self, i: int) -> int:
        return i % self.n if self.affine else i


@dataclass(frozen=True)
class FixedPoint:
    units: tuple

    @staticmethod
    def of(*units) -> "FixedPoint":
        return FixedPoint(tuple((int(b), as_partition(lam)) for b, lam in units))

    @property
    def total_boxes(self) -> int:
        return sum(sum(lam) for _, lam in self.units)


@dataclass(frozen=True)
class Chamber:
    """Unit indices ordered so that earlier parameters vanish first.

    order[0] is the smallest unit in the chamber order: its framing parameter
    goes to zero fastest, so unit a precedes unit b exactly when a appears
    before b in the list.
    """

    order: tuple

    def rank(self, unit_idx: int) -> int:
        return self.order.index(unit_idx)

    def precedes(self, a: int, b: int) -> bool:
        return self.rank(a) < self.rank(b)

    def reversed(self) -> "Chamber":
        return Chamber(tuple(reversed(self.order)))


def _check_chamber(chamber: Chamber, count: int):
    if sorted(chamber.order) != list(range(count)):
        raise UnresolvedLimit(
            f"chamber {chamber.order} is not a strict order on {count} units")


def unit_vertex_profile(spec: QuiverSpec, base: int, lam: Partition) -> dict:
    """Box counts of one framed partition, keyed by quiver vertex."""
    out: dict = {}
    for a, b in boxes(lam):
        i = spec.fold(base + a - b)
        out[i] = out.get(i, 0) + 1
    return out


def derive_spec(n: int, affine: bool, point: FixedPoint) -> QuiverSpec:
    """Build the dimension data a fixed point determines; reject stray boxes."""
    spec = QuiverSpec(n, affine)
    v = [0] * n
    w = [0] * n
    for base, lam in point.units:
        if not 0 <= base < n:
            raise InvalidFixedPoint(f"framing vertex {base} outside 0..{n - 1}")
        w[base] += 1
        for i, c in unit_vertex_profile(spec, base, lam).items():
            if not 0 <= i < n:
                raise InvalidFixedPoint(
                    f"box over vertex {i} outside the finite quiver")
            v[i] += c
    return QuiverSpec(n, affine, tuple(v), tuple(w))


def validate_fixed_point(spec: QuiverSpec, point: FixedPoint) -> bool:
    """True iff per-vertex box counts match v and framing counts match w."""
    try:
        derived = derive_spec(spec.n, spec.affine, point)
    except InvalidFixedPoint:
        return False
    return derived.v == tuple(spec.v) and derived.w == tuple(spec.w)


def require_valid(spec: QuiverSpec, point: FixedPoint):
    derived = derive_spec(spec.n, spec.affine, point)
    if derived.v != tuple(spec.v):
        bad = next(i for i in range(spec.n) if derived.v[i] != spec.v[i])
        raise InvalidFixedPoint(
            f"vertex {bad}: {derived.v[bad]} boxes, dimension wants {spec.v[bad]}")
    if derived.w != tuple(spec.w):
        bad = next(i for i in range(spec.n) if derived.w[i] != spec.w[i])
        raise InvalidFixedPoint(
            f"vertex {bad}: {derived.w[bad]} framings, expected {spec.w[bad]}")


def nu_shift(spec: QuiverSpec, point: FixedPoint, unit_idx: int, i: int,
             chamber: Chamber) -> int:
    """Power of (hbar/q) rescaling z_i inside one factor of the limit.

    Vertex-profile differences of the other units enter according to their
    chamber position relative to the chosen unit, plus one for every
    preceding unit framed at vertex i.  Profiles are taken in quiver-vertex
    coordinates (folded mod n in the affine case).
    """
    _check_chamber(chamber, len(point.units))
    i = spec.fold(i)
    total = 0
    for mu_idx, (base, mu) in enumerate(point.units):
        if mu_idx == unit_idx:
            continue
        prof = unit_vertex_profile(spec, base, mu)
        if chamber.precedes(mu_idx, unit_idx):
            total += prof.get(spec.fold(i - 1), 0) - prof.get(i, 0)
            if spec.fold(base) == i:
                total += 1
        else:
            total += prof.get(i, 0) - prof.get(spec.fold(i + 1), 0)
    return total


def vertex_limit_factorized(fld, spec: QuiverSpec, point: FixedPoint,
                            chamber: Chamber, cap: int) -> TruncatedSeries:
    """Chamber limit as a product of single-diagram series.

    Each unit contributes its hook-product series with content columns
    relabeled to quiver vertices through its base and every variable
    rescaled by the chamber shift.
    """
    _check_chamber(chamber, len(point.units))
    out = TruncatedSeries.one(cap, fld)
    for idx, (base, lam) in enumerate(point.units):
        z = zfun_product(fld, lam, cap)
        nu_at: dict = {}
        shifted: dict = {}
        for key, c in z.terms.items():
            exps: dict = {}
            for content_idx, e in key:
                vertex = spec.fold(base + content_idx)
                exps[vertex] = exps.get(vertex, 0) + e
                if vertex not in nu_at:
                    nu_at[vertex] = nu_shift(spec, point, idx, vertex, chamber)
                c = c * fld.hq(nu_at[vertex]) ** e
            newkey = tuple(sorted(exps.items()))
            prev = shifted.get(newkey)
            shifted[newkey] = c if prev is None else prev + c
        out = out * TruncatedSeries(cap, shifted)
    return out


def chamber_limit_oracle(fld, spec: QuiverSpec, point: FixedPoint,
                         chamber: Chamber, cap: int) -> TruncatedSeries:
    """Direct fixed-point sum followed by the exact parameter limit.

    Finite type only.  Every Pochhammer-ratio pair carries an integer
    chamber weight from its framing-parameter content: positive-weight pairs
    degenerate to 1, negative-weight pairs to their leading (hbar/q) power,
    and weight-zero pairs are kept exactly.
    """
    if spec.affine:
        raise ValueError("the chamber-limit oracle handles finite type only")
    _check_chamber(chamber, len(point.units))
    require_valid(spec, point)

    roots = []  # (vertex, hbar exponent, unit index)
    for idx, (base, lam) in enumerate(point.units):
        for a, b in boxes(lam):
            roots.append((base + a - b, b - 1, idx))

    entries = []  # (sign, unit_a, unit_b, box_a, box_b or None)
    for t1, (i1, _, u1) in enumerate(roots):
        for t2, (i2, _, u2) in enumerate(roots):
            if i2 == i1 + 1:
                entries.append((1, u2, u1, t2, t1))
            if i2 == i1:
                entries.append((-1, u2, u1, t2, t1))
    for nu_idx, (nu_base, _) in enumerate(point.units):
        for t, (i, _, u) in enumerate(roots):
            if i == nu_base:
                entries.append((1, u, nu_idx, t, None))

    hexp = [h for _, h, _ in roots]
    terms: dict = {}
    for total in range(cap + 1):
        for combo in _compositions(total, len(roots)):
            ratios = []
            shift = 0
            for sign, ua, ub, ta, tb in entries:
                delta = combo[ta] - (combo[tb] if tb is not None else 0)
                if delta == 0:
                    continue
                if ua == ub:
                    m = hexp[ta] - (hexp[tb] if tb is not None else 0)
                    num = fld.hbar_q(m + 1, 0)
                    den = fld.hbar_q(m, 1)
                    if sign > 0:
                        ratios.append((num, den, delta))
                    else:
                        ratios.append((den, num, delta))
                elif chamber.rank(ua) == chamber.rank(ub):
                    raise UnresolvedLimit(
                        f"units {ua} and {ub} are not separated by the chamber")
                elif chamber.precedes(ua, ub):
                    continue  # the ratio pair tends to 1
                else:
                    shift += sign * delta
            coeff = poch_ratio_product(fld, ratios)
            if not coeff:
                continue
            coeff = coeff * fld.hq(shift)
            exps: dict = {}
            for t, (i, _, _) in enumerate(roots):
                if combo[t]:
                    exps[i] = exps.get(i, 0) + combo[t]
            key = tuple(sorted(exps.items()))
            prev = terms.get(key)
            terms[key] = coeff if prev is None else prev + coeff
    return TruncatedSeries(cap, terms)


def mirror_tangent_character(spec: QuiverSpec, point: FixedPoint) -> tuple:
    """Predicted tangent weights at the dual fixed point.

    Hook monomials of every unit, relabeled to quiver vertices, with hbar
    set to q (so all (hbar/q) powers collapse), together with all their
    inverses.  The result is an inversion-closed multiset of 2 * (total
    boxes) Laurent monomials.
    """
    monos = []
    for base, lam in point.units:
        for box in boxes(lam):
            exps: dict = {}
            for c in hook_contents(lam, box):
                vertex = spec.fold(base + c)
                exps[vertex] = exps.get(vertex, 0) + 1
            mono = ZMonomial.from_exps(exps)
            monos.append(mono)
            monos.append(mono.inverse())
    return tuple(sorted(monos, key=ZMonomial.sort_key))


def diagram_character(lam: Partition) -> tuple:
    """Single-diagram character in content coordinates (base shift zero)."""
    monos = []
    for box in boxes(lam):
        mono = ZMonomial.from_exps({c: 1 for c in hook_contents(lam, box)})
        monos.append(mono)
        monos.append(mono.inverse())
    return tuple(sorted(monos, key=ZMonomial.sort_key))


def partitions_at_vertex(n: int, base: int, max_size: int):
    """Partitions whose boxes stay over the finite quiver when based there."""
    return partitions_up_to(max_size, max_len=n - base, max_part=base + 1)


def enumerate_fixed_points(n: int, num_units: int, max_total: int,
                           min_total: int = 0):
    """All canonical fixed points of finite A_n with the given unit count.

    Units are emitted in nondecreasing (vertex, partition) order so each
    unordered configuration appears once.  Yields (spec, point) pairs with
    dimension data derived from the point.
    """
    placements = []
    for base in range(n):
        for lam in partitions_at_vertex(n, base, max_total):
            placements.append((base, lam))
    placements.sort()
    for combo in itertools.combinations_with_replacement(placements, num_units):
        total = sum(sum(lam) for _, lam in combo)
        if not min_total <= total <= max_total:
            continue
        point = FixedPoint(tuple(combo))
        yield derive_spec(n, False, point), point


def point_to_obj(spec: QuiverSpec, point: FixedPoint) -> dict:
    return {
        "n": spec.n,
        "affine": spec.affine,
        "v": list(spec.v),
        "w": list(spec.w),
        "partitions": [{"vertex": b, "parts": list(lam)}
                       for b, lam in point.units],
    }


def point_from_obj(obj: dict) -> tuple[QuiverSpec, FixedPoint]:
    """Parse the fixed-point JSON schema; v and w may be given or derived."""
    n = int(obj["n"])
    affine = bool(obj.get("affine", False))
    units = tuple((int(u["vertex"]), as_partition(u["parts"]))
                  for u in obj.get("partitions", []))
    point = FixedPoint(units)
    derived = derive_spec(n, affine, point)
    spec = QuiverSpec(n, affine,
                      tuple(obj.get("v", derived.v)),
                      tuple(obj.get("w", derived.w)))
    require_valid(spec, point)
    return spec, point
