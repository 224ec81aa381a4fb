"""Young-diagram combinatorics.

Boxes are addressed by 1-based (row, col); the content of a box is
row - col, so the corner box has content 0, the first row extends toward
negative contents and the first column toward positive ones.  This is the
unique convention reproducing the column profile (..., 1, 1, 2, 2, 3, 2, 2,
1, ...) for the diagram (5, 4, 3, 2) with the long row on the negative side.
"""

from __future__ import annotations

from functools import cache
from typing import Iterator, Mapping

from .errors import OutOfDiagram
from .series import ZMonomial

Partition = tuple

PLUS, MINUS = 1, -1


def as_partition(parts) -> Partition:
    """Validate and canonicalize a weakly decreasing list of positive parts."""
    parts = tuple(int(p) for p in parts if int(p) != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(p) for p in text.split(","))


def partition_str(lam: Partition) -> str:
    return ",".join(str(p) for p in lam)


def all_partitions(n: int, max_len: int | None = None,
                   max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n, lexicographically descending."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(remaining: int, bound: int, length: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - first, first, length - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_len)


def partitions_up_to(n: int, max_len: int | None = None,
                     max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of size 0..n."""
    for k in range(n + 1):
        yield from all_partitions(k, max_len, max_part)


def boxes(lam: Partition) -> Iterator[tuple[int, int]]:
    for a, row in enumerate(lam, start=1):
        for b in range(1, row + 1):
            yield (a, b)


def content(box: tuple[int, int]) -> int:
    a, b = box
    return a - b


def arm(lam: Partition, row: int, col: int) -> int:
    return lam[row - 1] - col


def leg(lam: Partition, row: int, col: int) -> int:
    return sum(1 for a in range(row + 1, len(lam) + 1) if lam[a - 1] >= col)


@cache
def _profile(lam: Partition) -> dict:
    v: dict = {}
    for box in boxes(lam):
        c = content(box)
        v[c] = v.get(c, 0) + 1
    return v


def column_profile(lam: Partition) -> dict:
    """Number of boxes in each diagonal column, keyed by content."""
    return dict(_profile(lam))


def profile_span(lam: Partition) -> tuple[int, int]:
    """Leftmost and rightmost contents with a nonzero column; (0, -1) if empty."""
    if not lam:
        return (0, -1)
    return (1 - lam[0], len(lam) - 1)


def sigma_hat(lam: Partition, i: int) -> int:
    """Shift exponent of z_i: the profile difference v_{i-1} - v_i, plus one
    on the diagonal column i = 0."""
    v = _profile(lam)
    out = v.get(i - 1, 0) - v.get(i, 0)
    return out + 1 if i == 0 else out


def tau(lam: Partition, i: int) -> int:
    """Boundary slope marker at column i: +1 for an up-step, -1 for a down-step."""
    v = _profile(lam)
    diff = v.get(i, 0) - v.get(i + 1, 0)
    if i >= 0:
        return PLUS if diff == 1 else MINUS
    return PLUS if diff == 0 else MINUS


def hook_contents(lam: Partition, box: tuple[int, int]) -> range:
    """Contents covered by the hook at a box: a contiguous interval."""
    a, b = box
    if not (1 <= a <= len(lam) and 1 <= b <= lam[a - 1]):
        raise OutOfDiagram(f"box {box} not in {lam}")
    c = a - b
    return range(c - arm(lam, a, b), c + leg(lam, a, b) + 1)


def z_box(lam: Partition, box: tuple[int, int]) -> ZMonomial:
    """Product of shifted variables over the hook based at a box."""
    span = hook_contents(lam, box)
    hq = sum(sigma_hat(lam, i) for i in span)
    return ZMonomial.from_exps({i: 1 for i in span}, hq)


def l_char(lam: Partition) -> list[ZMonomial]:
    """One hook monomial per box; the tangent-weight multiset of the diagram."""
    return [z_box(lam, box) for box in boxes(lam)]


def dim_formula(v: Mapping[int, int]) -> int:
    """2(v_0 + sum v_i v_{i+1} - sum v_i^2); zero exactly on diagram profiles."""
    quad = sum(c * v.get(i + 1, 0) - c * c for i, c in v.items())
    return 2 * (v.get(0, 0) + quad)


def interlaces(upper: Partition, lower: Partition) -> bool:
    """upper_1 >= lower_1 >= upper_2 >= lower_2 >= ... (zero padded)."""
    n = max(len(upper), len(lower))
    for j in range(n):
        u_j = upper[j] if j < len(upper) else 0
        l_j = lower[j] if j < len(lower) else 0
        u_next = upper[j + 1] if j + 1 < len(upper) else 0
        if u_j < l_j or l_j < u_next:
            return False
    return True


def partitions_above(lam: Partition, max_gain: int) -> Iterator[Partition]:
    """All mu with mu interlacing lam from above and |mu| - |lam| <= max_gain."""
    n = len(lam)

    def rec(j: int, budget: int, prefix: tuple) -> Iterator[Partition]:
        if j == n + 2:
            yield prefix
            return
        lo = lam[j - 1] if j <= n else 0
        if j == 1:
            hi = lo + budget
        else:
            hi = min(lam[j - 2], lo + budget)
        if lo == 0:
            yield prefix
            lo = 1
        for val in range(lo, hi + 1):
            base = lam[j - 1] if j <= n else 0
            yield from rec(j + 1, budget - (val - base), prefix + (val,))

    yield from rec(1, max_gain, ())


def partitions_below(lam: Partition) -> Iterator[Partition]:
    """All mu interlaced by lam from above (mu precedes lam)."""
    n = len(lam)

    def rec(j: int, prefix: tuple) -> Iterator[Partition]:
        if j == n + 1:
            yield prefix
            return
        lo = lam[j] if j < n else 0
        if lo == 0:
            yield prefix
            lo = 1
        for val in range(lo, lam[j - 1] + 1):
            yield from rec(j + 1, prefix + (val,))

    yield from rec(1, ())


def enumerate_interlacing(lam: Partition, maxdeg: int) -> Iterator[tuple]:
    """Stream the partition tuples interlacing according to the shape of lam.

    One partition per nonzero column, left to right; consecutive entries
    interlace as dictated by the boundary slope, lengths are bounded by the
    column profile, and the total size is at most maxdeg.  Deterministic
    depth-first order.
    """
    lo, hi = profile_span(lam)
    if hi < lo:
        yield ()
        return
    v = _profile(lam)

    def rec(i: int, prev: Partition, used: int, acc: tuple) -> Iterator[tuple]:
        if i > hi:
            yield acc
            return
        budget = maxdeg - used
        vi = v[i]
        if i == lo:
            candidates = partitions_up_to(budget, max_len=vi)
        elif tau(lam, i - 1) == PLUS:
            candidates = (m for m in partitions_below(prev) if len(m) <= vi)
        else:
            candidates = (m for m in partitions_above(prev, budget)
                          if len(m) <= vi)
        for m in candidates:
            size = sum(m)
            if used + size <= maxdeg:
                yield from rec(i + 1, m, used + size, acc + (m,))

    yield from rec(lo, (), 0, ())


def in_shape(lam: Partition, tup: tuple) -> bool:
    """Check the three interlacing-tuple conditions directly."""
    lo, hi = profile_span(lam)
    if len(tup) != hi - lo + 1:
        return False
    v = _profile(lam)
    for idx, part in enumerate(tup):
        if len(part) > v[lo + idx]:
            return False
    for idx in range(len(tup) - 1):
        i = lo + idx
        left, right = tup[idx], tup[idx + 1]
        if tau(lam, i) == PLUS:
            if not interlaces(left, right):
                return False
        elif not interlaces(right, left):
            return False
    return True


def lemma_sum(lam: Partition, tup: tuple) -> tuple[int, int]:
    """Both sides of the boundary-bookkeeping identity, independently.

    The left side sums part differences across and within columns; the right
    side is minus the shift-weighted size sum.  Equality is the combinatorial
    fact that makes the operator and lattice expansions agree.
    """
    lo, hi = profile_span(lam)
    v = _profile(lam)

    def part(p: Partition, j: int) -> int:
        return p[j - 1] if j <= len(p) else 0

    lhs = 0
    for idx in range(hi - lo):
        i = lo + idx
        left, right = tup[idx], tup[idx + 1]
        strict = tau(lam, i) == MINUS
        for j in range(1, v[i] + 1):
            for k in range(1, v[i + 1] + 1):
                if (j < k) if strict else (j <= k):
                    lhs += part(left, j) - part(right, k)
    for idx in range(hi - lo + 1):
        i = lo + idx
        p = tup[idx]
        for j in range(1, v[i] + 1):
            for k in range(j + 1, v[i] + 1):
                lhs += part(p, k) - part(p, j)
    rhs = -sum(sigma_hat(lam, lo + idx) * sum(tup[idx])
               for idx in range(hi - lo + 1))
    return lhs, rhs


def profile_to_obj(lam: Partition) -> dict:
    """Column profile as a JSON object keyed by content index."""
    return {str(i): v for i, v in sorted(_profile(lam).items())}


def tuple_to_obj(lam: Partition, tup: tuple) -> dict:
    """Interlacing tuple as a JSON object keyed by content index."""
    lo, _ = profile_span(lam)
    return {str(lo + idx): list(p) for idx, p in enumerate(tup)}
