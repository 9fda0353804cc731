"""Stanley depth via exact search over interval partitions.

The divisibility poset of a quotient of squarefree monomial ideals is closed
under taking intervals, and every interval [u, v] is a full boolean cube.  A
partition of the poset into intervals is scored by the least degree among its
tops; the Stanley depth of the quotient is the best achievable score, which
turns its computation into an exact-cover search.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from .errors import SizeLimitExceeded
from .monomials import (
    Monomial,
    PosetSlice,
    QuotientInstance,
    build_poset,
    _submasks,
)


@dataclass(frozen=True)
class Interval:
    """The divisibility interval [lo, hi]; a boolean cube with 2^(deg hi - deg lo) elements."""

    lo: Monomial
    hi: Monomial

    def __post_init__(self) -> None:
        if not self.lo.divides(self.hi):
            raise ValueError(f"{self.lo} does not divide {self.hi}")

    @property
    def is_singleton(self) -> bool:
        return self.lo == self.hi

    def elements(self) -> Iterator[Monomial]:
        free = self.hi.mask & ~self.lo.mask
        for sub in _submasks(free):
            yield Monomial(self.lo.mask | sub, self.lo.n)

    def element_masks(self) -> Iterator[int]:
        free = self.hi.mask & ~self.lo.mask
        for sub in _submasks(free):
            yield self.lo.mask | sub

    def __contains__(self, m: Monomial) -> bool:
        return self.lo.divides(m) and m.divides(self.hi)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def interval_elements(interval: Interval) -> tuple[Monomial, ...]:
    return tuple(sorted(interval.elements(), key=lambda m: (m.degree, m.mask)))


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[Interval, ...]

    @property
    def sdepth_value(self) -> int:
        if not self.intervals:
            raise ValueError("empty partition has no value")
        return min(iv.hi.degree for iv in self.intervals)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __str__(self) -> str:
        return ", ".join(str(iv) for iv in self.intervals)


def _canonical_intervals(pairs: list[tuple[int, int]], n: int) -> IntervalPartition:
    pairs.sort(key=lambda p: (bin(p[0]).count("1"), p[0]))
    return IntervalPartition(
        tuple(Interval(Monomial(lo, n), Monomial(hi, n)) for lo, hi in pairs)
    )


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    kind: Optional[str] = None  # "NotAnInterval" | "Overlap" | "Uncovered"
    witness: Optional[Monomial] = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_partition(poset: PosetSlice, partition: IntervalPartition) -> ValidationResult:
    """Check that ``partition`` covers ``poset`` exactly once with true intervals."""
    seen: dict[int, Interval] = {}
    for iv in partition:
        for mask in iv.element_masks():
            if mask not in poset.masks:
                return ValidationResult(
                    False,
                    "NotAnInterval",
                    Monomial(mask, poset.n),
                    f"{iv} contains {Monomial(mask, poset.n)}, which is outside the poset",
                )
            if mask in seen:
                return ValidationResult(
                    False,
                    "Overlap",
                    Monomial(mask, poset.n),
                    f"{Monomial(mask, poset.n)} lies in both {seen[mask]} and {iv}",
                )
            seen[mask] = iv
    for m in poset:
        if m.mask not in seen:
            return ValidationResult(
                False, "Uncovered", m, f"{m} is not covered by any interval"
            )
    return ValidationResult(True)


class SdepthResult(NamedTuple):
    value: int
    witness: IntervalPartition


def brute_force_sdepth(poset: PosetSlice, bound: int = 14) -> int:
    """Exhaustive sdepth over all interval partitions; the reference oracle.

    Walks every partition via memoized max-min recursion on the set of
    uncovered elements, with no degree restrictions on interval tops, so it
    shares no search-shaping assumptions with :func:`sdepth_decision`.
    """
    size = len(poset)
    if size > bound:
        raise SizeLimitExceeded(
            f"brute-force sdepth is capped at {bound} poset elements, got {size}"
        )
    if size == 0:
        raise ValueError("empty poset has no Stanley depth")
    elems = poset.sorted_elements
    index = {m.mask: i for i, m in enumerate(elems)}
    degrees = [m.degree for m in elems]
    masks = [m.mask for m in elems]

    # cube_bits[i][j]: element-index bit set of the interval [elems[i], elems[j]].
    candidates: list[list[tuple[int, int, int]]] = []
    for i, m in enumerate(elems):
        row = []
        for j, v in enumerate(elems):
            if m.mask & v.mask == m.mask:
                bits = 0
                for sub in _submasks(v.mask & ~m.mask):
                    bits |= 1 << index[m.mask | sub]
                row.append((degrees[j], v.mask, bits))
        candidates.append(row)

    cache: dict[int, int] = {}

    def best(uncovered: int) -> int:
        if uncovered == 0:
            return 10**9
        hit = cache.get(uncovered)
        if hit is not None:
            return hit
        low = (uncovered & -uncovered).bit_length() - 1
        score = 0
        for deg_v, _vmask, bits in candidates[low]:
            if bits & ~uncovered:
                continue
            score = max(score, min(deg_v, best(uncovered & ~bits)))
        cache[uncovered] = score
        return score

    return best((1 << size) - 1)


def sdepth_decision(
    poset: PosetSlice,
    k: int,
    trim: bool = True,
    memo_limit: int = 64,
) -> Optional[IntervalPartition]:
    """Search for an interval partition all of whose tops have degree >= k.

    With ``trim=True`` the search only places tops of degree exactly k under
    elements of lower degree and covers everything of degree >= k by
    singletons.  That loses no generality: splitting the poset along its last
    variable refines any partition with tops of degree >= k into one of this
    shape, one variable at a time.  ``trim=False`` searches tops of every
    degree >= k and exists to cross-check the reduction.

    Returns a witness partition in canonical order, or None.  Failed search
    states are memoized when the poset has at most ``memo_limit`` elements.
    """
    n = poset.n
    size = len(poset)
    if size == 0:
        return IntervalPartition(())
    elems = poset.sorted_elements
    index = {m.mask: i for i, m in enumerate(elems)}
    degrees = [m.degree for m in elems]

    # In trim mode everything of degree > k is covered by a forced singleton;
    # degree-k elements stay in the search so they can serve as tops.  The
    # forced singletons never collide with a candidate cube because trim-mode
    # cubes only contain elements of degree <= k.
    fixed: list[tuple[int, int]] = []
    active: list[int] = []
    for i, m in enumerate(elems):
        if trim and m.degree > k:
            fixed.append((m.mask, m.mask))
        else:
            active.append(i)
    if not active:
        return _canonical_intervals(fixed, n)

    # Admissible tops per active element; computed once.  In trim mode an
    # element below degree k may only be topped at degree exactly k.
    tops: dict[int, list[tuple[int, int]]] = {}
    for i in active:
        m = elems[i]
        row = []
        for v in elems:
            if v.degree < k or (trim and v.degree > k):
                continue
            if m.mask & v.mask != m.mask:
                continue
            bits = 0
            for sub in _submasks(v.mask & ~m.mask):
                bits |= 1 << index[m.mask | sub]
            row.append((v.mask, bits))
        if not row:
            return None  # this element cannot reach degree k at all
        tops[i] = row

    start = 0
    for i in active:
        start |= 1 << i

    memo_enabled = size <= memo_limit
    failed: set[int] = set()

    def viable(i: int, uncovered: int) -> list[tuple[int, int]]:
        return [(v, bits) for v, bits in tops[i] if not bits & ~uncovered]

    def search(uncovered: int) -> Optional[list[tuple[int, int]]]:
        if uncovered == 0:
            return []
        if memo_enabled and uncovered in failed:
            return None
        # Lowest (degree, support) uncovered element fixes the degree class;
        # within the class, branch on the element with the fewest viable tops.
        first = (uncovered & -uncovered).bit_length() - 1
        target_degree = degrees[first]
        pick = first
        pick_row = viable(first, uncovered)
        if len(pick_row) != 1:
            scan = uncovered >> (first + 1)
            j = first + 1
            while scan:
                if scan & 1:
                    if degrees[j] != target_degree:
                        break
                    row = viable(j, uncovered)
                    if len(row) < len(pick_row):
                        pick, pick_row = j, row
                        if not row:
                            break
                        if len(row) == 1:
                            break
                scan >>= 1
                j += 1
        if not pick_row:
            if memo_enabled:
                failed.add(uncovered)
            return None
        lo_mask = elems[pick].mask
        for vmask, bits in pick_row:
            rest = search(uncovered & ~bits)
            if rest is not None:
                rest.append((lo_mask, vmask))
                return rest
        if memo_enabled:
            failed.add(uncovered)
        return None

    chosen = search(start)
    if chosen is None:
        return None
    return _canonical_intervals(fixed + chosen, n)


def _sdepth_upper_bound(poset: PosetSlice) -> int:
    """min over minimal elements m of the largest degree among multiples of m."""
    elems = poset.sorted_elements
    bound = None
    for m in elems:
        if any(v.mask & m.mask == v.mask and v != m for v in elems):
            continue  # not minimal
        reach = max(
            v.degree for v in elems if m.mask & v.mask == m.mask
        )
        bound = reach if bound is None else min(bound, reach)
    assert bound is not None
    return bound


def sdepth_of_poset(poset: PosetSlice, memo_limit: int = 64) -> SdepthResult:
    if len(poset) == 0:
        raise ValueError("empty poset has no Stanley depth")
    for k in range(_sdepth_upper_bound(poset), poset.min_degree - 1, -1):
        witness = sdepth_decision(poset, k, memo_limit=memo_limit)
        if witness is not None:
            return SdepthResult(k, witness)
    raise AssertionError("unreachable: the all-singletons partition always succeeds")


def sdepth(instance: QuotientInstance, memo_limit: int = 64) -> SdepthResult:
    """Stanley depth of the quotient together with an optimal witness partition."""
    return sdepth_of_poset(build_poset(instance), memo_limit=memo_limit)


def restrict_poset_to_variable(poset: PosetSlice, t: int) -> PosetSlice:
    bit = 1 << (t - 1)
    return PosetSlice(poset.n, [m for m in poset.masks if m & bit])


def restrict_partition_to_variable(
    partition: IntervalPartition, t: int
) -> IntervalPartition:
    """Intersect each interval with the multiples of x_t.

    [u, v] meets that set iff x_t divides v, and then the intersection is the
    interval [lcm(u, x_t), v]; so a partition restricts to a partition of the
    restricted poset, with the same tops and hence no worse a value.
    """
    kept = []
    for iv in partition:
        bit = 1 << (t - 1)
        if iv.hi.mask & bit:
            kept.append(Interval(Monomial(iv.lo.mask | bit, iv.lo.n), iv.hi))
    return IntervalPartition(tuple(kept))
