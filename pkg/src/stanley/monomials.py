"""Squarefree monomials, monomial ideals, and the divisibility poset of a quotient.

Variables are numbered 1..n with n <= 64.  A squarefree monomial is stored as
the bit set of its support: bit i-1 is set iff x_i divides the monomial.  All
values here are immutable and every operation is pure, so they can be shared
freely between threads and worker processes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import AmbientMismatch

MAX_VARS = 64


def _check_same_ring(a: "Monomial", b: "Monomial") -> None:
    if a.n != b.n:
        raise AmbientMismatch(
            f"monomials live in rings with {a.n} and {b.n} variables"
        )


@dataclass(frozen=True, order=True)
class Monomial:
    """A squarefree monomial, ordered by its support read as a little-endian integer.

    The ordering (mask, then n) makes sorting deterministic; monomials are only
    ever compared within a single ambient ring.
    """

    mask: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(
                f"support {bin(self.mask)} does not fit in {self.n} variables"
            )

    @classmethod
    def from_support(cls, support: Iterable[int], n: int) -> "Monomial":
        mask = 0
        for i in support:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return self.mask & other.mask == self.mask

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(self.mask | other.mask, self.n)

    def times_var(self, i: int) -> "Monomial":
        if not 1 <= i <= self.n:
            raise ValueError(f"variable index {i} out of range 1..{self.n}")
        bit = 1 << (i - 1)
        if self.mask & bit:
            raise ValueError(f"x{i} already divides {self}; product is not squarefree")
        return Monomial(self.mask | bit, self.n)

    def __str__(self) -> str:
        if not self.mask:
            return "1"
        return "*".join(f"x{i}" for i in self.support)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def canonical_gen_sort(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Sort generators by (degree, support-as-integer), the canonical order."""
    return tuple(sorted(gens, key=lambda g: (g.degree, g.mask)))


def minimal_generators(gens: Sequence[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal subset of ``gens``, canonically sorted.

    Duplicates collapse to a single copy.  Quadratic in the number of
    generators, which is small throughout this package.
    """
    unique = canonical_gen_sort(set(gens))
    kept: list[Monomial] = []
    for g in unique:
        if not any(h.divides(g) for h in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal held by its minimal generators in canonical order.

    The constructor insists on an already canonical generator tuple so that
    equal ideals compare equal; use :meth:`of` to build from arbitrary input.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {self.n}")
        gens = self.generators
        for g in gens:
            if g.n != self.n:
                raise AmbientMismatch(
                    f"generator {g} lives in a {g.n}-variable ring, ideal in {self.n}"
                )
            if g.degree == 0:
                raise ValueError("the unit monomial cannot be an ideal generator")
        for a, b in combinations(gens, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError(f"generators {a} and {b} are not minimal")
        if tuple(gens) != canonical_gen_sort(gens):
            raise ValueError("generators are not in canonical (degree, support) order")

    @classmethod
    def of(cls, n: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        return cls(n, tuple(minimal_generators(list(gens))))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def contains(self, m: Monomial) -> bool:
        if m.n != self.n:
            raise AmbientMismatch(
                f"monomial in a {m.n}-variable ring, ideal in {self.n}"
            )
        return any(g.mask & m.mask == g.mask for g in self.generators)

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & mask == g.mask for g in self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return self.contains(m)

    def plus(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if other.n != self.n:
            raise AmbientMismatch("cannot add ideals from different rings")
        return MonomialIdeal.of(self.n, self.generators + other.generators)

    def plus_monomials(self, gens: Iterable[Monomial]) -> "MonomialIdeal":
        return MonomialIdeal.of(self.n, tuple(self.generators) + tuple(gens))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection; for squarefree monomial ideals the pairwise lcms generate it."""
        if other.n != self.n:
            raise AmbientMismatch("cannot intersect ideals from different rings")
        pairs = [a.lcm(b) for a in self.generators for b in other.generators]
        return MonomialIdeal.of(self.n, pairs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def ideal_membership(m: Monomial, ideal: MonomialIdeal) -> bool:
    return ideal.contains(m)


@dataclass(frozen=True)
class QuotientInstance:
    """A quotient of squarefree monomial ideals, numerator over denominator.

    The numerator is minimally generated by F (all of degree exactly d) together
    with E (degrees >= d+1); the denominator J sits inside the numerator and all
    its generators have degree >= d+1, so the degree-d generators survive in the
    quotient.  J may be zero.
    """

    n: int
    d: int
    F: tuple[Monomial, ...]
    E: tuple[Monomial, ...]
    J: MonomialIdeal

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VARS:
            raise ValueError(f"variable count must be in 1..{MAX_VARS}, got {self.n}")
        if self.d < 1:
            raise ValueError(f"generator degree d must be >= 1, got {self.d}")
        if not self.F:
            raise ValueError("at least one degree-d generator is required")
        for f in self.F:
            if f.n != self.n:
                raise AmbientMismatch(f"generator {f} has the wrong ambient ring")
            if f.degree != self.d:
                raise ValueError(f"generator {f} has degree {f.degree}, expected {self.d}")
        for e in self.E:
            if e.n != self.n:
                raise AmbientMismatch(f"generator {e} has the wrong ambient ring")
            if e.degree < self.d + 1:
                raise ValueError(
                    f"extra generator {e} has degree {e.degree}, expected >= {self.d + 1}"
                )
        if tuple(self.F) != canonical_gen_sort(self.F):
            raise ValueError("F is not in canonical order")
        if tuple(self.E) != canonical_gen_sort(self.E):
            raise ValueError("E is not in canonical order")
        all_gens = self.F + self.E
        if len(set(all_gens)) != len(all_gens):
            raise ValueError("duplicate generators in F and E")
        for a, b in combinations(all_gens, 2):
            if a.divides(b) or b.divides(a):
                raise ValueError(f"F and E are not a minimal generating set: {a} | {b}")
        if self.J.n != self.n:
            raise AmbientMismatch("J has the wrong ambient ring")
        numerator = MonomialIdeal(self.n, tuple(canonical_gen_sort(all_gens)))
        for g in self.J.generators:
            if g.degree < self.d + 1:
                raise ValueError(
                    f"denominator generator {g} has degree {g.degree}, expected >= {self.d + 1}"
                )
            if not numerator.contains(g):
                raise ValueError(f"denominator generator {g} lies outside the numerator")

    @property
    def r(self) -> int:
        return len(self.F)

    @property
    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.n, tuple(canonical_gen_sort(self.F + self.E)))

    def __str__(self) -> str:
        return format_instance(self)


class PosetSlice:
    """The finite poset of squarefree monomials inside one ideal and outside another,
    ordered by divisibility.

    Intervals between two of its elements are full boolean cubes: if u, v lie in
    the slice and u divides w divides v then w lies in the slice too, because
    membership in the numerator propagates up and avoidance of the denominator
    propagates down.
    """

    __slots__ = ("n", "masks", "elements", "by_degree", "sorted_elements")

    def __init__(self, n: int, masks: Iterable[int]):
        self.n = n
        self.masks = frozenset(masks)
        self.elements = frozenset(Monomial(m, n) for m in self.masks)
        self.sorted_elements = tuple(
            sorted(self.elements, key=lambda m: (m.degree, m.mask))
        )
        by_degree: dict[int, list[Monomial]] = {}
        for m in self.sorted_elements:
            by_degree.setdefault(m.degree, []).append(m)
        self.by_degree = {k: tuple(v) for k, v in by_degree.items()}

    def __contains__(self, m: Monomial) -> bool:
        return m.mask in self.masks and m.n == self.n

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.sorted_elements)

    def degree_slice(self, k: int) -> tuple[Monomial, ...]:
        return self.by_degree.get(k, ())

    @property
    def max_degree(self) -> int:
        return max(self.by_degree) if self.by_degree else 0

    @property
    def min_degree(self) -> int:
        return min(self.by_degree) if self.by_degree else 0


def _submasks(free: int) -> Iterator[int]:
    """All subsets of the bit set ``free``, including 0 and ``free`` itself."""
    sub = free
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & free


def build_poset_pair(numerator: MonomialIdeal, denominator: MonomialIdeal) -> PosetSlice:
    """All squarefree monomials in the numerator but not in the denominator."""
    if numerator.n != denominator.n:
        raise AmbientMismatch("numerator and denominator live in different rings")
    n = numerator.n
    full = (1 << n) - 1
    masks: set[int] = set()
    for g in numerator.generators:
        base = g.mask
        for extra in _submasks(full & ~base):
            masks.add(base | extra)
    den = denominator.generators
    if den:
        masks = {m for m in masks if not any(j.mask & m == j.mask for j in den)}
    return PosetSlice(n, masks)


def build_poset(instance: QuotientInstance) -> PosetSlice:
    return build_poset_pair(instance.ideal, instance.J)


_VAR_RE = re.compile(r"^x(\d+)$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse ``x1*x3*x7`` style syntax with 1-based variable indices."""
    body = text.replace(" ", "")
    if not body:
        raise ValueError("empty monomial")
    seen: set[int] = set()
    for part in body.split("*"):
        m = _VAR_RE.match(part)
        if not m:
            raise ValueError(f"cannot parse monomial factor {part!r}")
        i = int(m.group(1))
        if i in seen:
            raise ValueError(f"repeated variable x{i} in squarefree monomial {text!r}")
        seen.add(i)
    return Monomial.from_support(seen, n)


def format_monomial(m: Monomial) -> str:
    return str(m)


_LINE_RE = re.compile(r"^(\w+)\s*[:=]\s*(.*)$")


def parse_instance(text: str) -> QuotientInstance:
    """Parse the plain-text instance format.

    ::

        n = 8
        d = 1
        F: x1, x2, x3, x4, x5
        E: x6*x7, x7*x8
        J: x1*x6, x1*x8

    Blank E or J entries (or missing lines) mean the empty set / zero ideal.
    Lines starting with ``#`` are comments.  A line without a ``key:`` prefix
    continues the previous key, so long generator lists can wrap.
    """
    fields: dict[str, str] = {}
    last_key: str | None = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE_RE.match(line)
        if not m:
            if last_key is None:
                raise ValueError(f"cannot parse instance line {raw!r}")
            fields[last_key] = f"{fields[last_key]} {line}"
            continue
        key = m.group(1)
        if key in fields:
            raise ValueError(f"duplicate key {key!r} in instance")
        fields[key] = m.group(2).strip()
        last_key = key
    for key in ("n", "d", "F"):
        if key not in fields:
            raise ValueError(f"instance is missing the {key!r} line")
    for key in fields:
        if key not in ("n", "d", "F", "E", "J"):
            raise ValueError(f"unknown instance key {key!r}")
    n = int(fields["n"])
    d = int(fields["d"])

    def monomial_list(value: str) -> list[Monomial]:
        value = value.strip()
        if not value:
            return []
        return [parse_monomial(part, n) for part in value.split(",")]

    F = canonical_gen_sort(monomial_list(fields["F"]))
    E = canonical_gen_sort(monomial_list(fields.get("E", "")))
    J = MonomialIdeal.of(n, monomial_list(fields.get("J", "")))
    return QuotientInstance(n=n, d=d, F=tuple(F), E=tuple(E), J=J)


def format_instance(instance: QuotientInstance) -> str:
    lines = [
        f"n = {instance.n}",
        f"d = {instance.d}",
        "F: " + ", ".join(str(f) for f in instance.F),
        "E: " + ", ".join(str(e) for e in instance.E),
        "J: " + ", ".join(str(g) for g in instance.J.generators),
    ]
    return "\n".join(lines) + "\n"
