"""Depth of quotients of squarefree monomial ideals, over an exact field.

Two independent routes are provided.  The main one reads the multigraded Betti
numbers off the Koszul complex restricted to squarefree degrees, which
suffices: the minimal free resolution of a squarefree module is supported in
squarefree multidegrees contained in the union of the generator supports.  The
oracle route resolves the quotient by the mapping cone of a comparison map
between the Taylor complexes of denominator and numerator and carries its own
rank routines, so the two implementations share no linear algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import SizeLimitExceeded
from .linalg import DEFAULT_FIELD, Field
from .monomials import (
    Monomial,
    MonomialIdeal,
    QuotientInstance,
    _submasks,
)

MAX_KOSZUL_VARS = 16
MAX_TAYLOR_GENS = 20


@dataclass(frozen=True)
class SquarefreeModuleSpec:
    """A subquotient numerator/denominator of the ring by squarefree ideals.

    ``numerator=None`` means the whole ring, so ``ring_mod`` specs describe
    S/J.  The denominator must sit inside the numerator.
    """

    n: int
    numerator: Optional[MonomialIdeal]
    denominator: MonomialIdeal

    def __post_init__(self) -> None:
        if self.denominator.n != self.n:
            raise ValueError("denominator lives in the wrong ring")
        if self.numerator is not None:
            if self.numerator.n != self.n:
                raise ValueError("numerator lives in the wrong ring")
            for g in self.denominator.generators:
                if g not in self.numerator:
                    raise ValueError(
                        f"denominator generator {g} lies outside the numerator"
                    )

    @classmethod
    def quotient(cls, instance: QuotientInstance) -> "SquarefreeModuleSpec":
        return cls(instance.n, instance.ideal, instance.J)

    @classmethod
    def ring_mod(cls, ideal: MonomialIdeal) -> "SquarefreeModuleSpec":
        return cls(ideal.n, None, ideal)

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> "SquarefreeModuleSpec":
        return cls(ideal.n, ideal, MonomialIdeal.zero(ideal.n))

    def member_mask(self, mask: int) -> bool:
        if self.numerator is not None and not self.numerator.contains_mask(mask):
            return False
        return not self.denominator.contains_mask(mask)

    def member(self, m: Monomial) -> bool:
        return self.member_mask(m.mask)

    @property
    def support_union(self) -> int:
        u = 0
        for g in self.denominator.generators:
            u |= g.mask
        if self.numerator is not None:
            for g in self.numerator.generators:
                u |= g.mask
        return u

    def describe(self) -> str:
        num = "S" if self.numerator is None else str(self.numerator)
        return f"{num} / {self.denominator}"


@dataclass(frozen=True)
class KoszulSummary:
    """Multigraded Betti data of one module over one field."""

    n: int
    field_name: str
    betti: Mapping[tuple[int, int], int]  # (homological degree, multidegree mask)
    pd: Optional[int]
    depth: float

    @property
    def is_zero_module(self) -> bool:
        return self.pd is None

    def betti_total(self, p: int) -> int:
        return sum(dim for (q, _), dim in self.betti.items() if q == p)

    def betti_by_monomial(self) -> dict[tuple[int, str], int]:
        return {
            (p, str(Monomial(mask, self.n))): dim
            for (p, mask), dim in sorted(self.betti.items())
        }


def _degree_homology(
    spec: SquarefreeModuleSpec,
    a: int,
    member: bytearray,
    fld: Field,
) -> dict[int, int]:
    """Nonzero Koszul homology dimensions at multidegree ``a``, by homological degree.

    The complex at degree a has basis {F subset of a : a minus F is in the
    module} in homological degree |F|, with the usual contraction boundary
    restricted to faces that stay in the module.
    """
    by_p: dict[int, list[int]] = {}
    for m in _submasks(a):
        if member[m]:
            f_mask = a ^ m
            by_p.setdefault(f_mask.bit_count(), []).append(f_mask)
    if not by_p:
        return {}
    index: dict[int, dict[int, int]] = {
        p: {f: i for i, f in enumerate(sorted(fs))} for p, fs in by_p.items()
    }
    ranks: dict[int, int] = {}
    for p, fs in by_p.items():
        if p == 0 or p - 1 not in by_p:
            continue
        target = index[p - 1]
        rows = []
        for f in sorted(fs):
            row: dict[int, int] = {}
            sign_bits = 0
            scan = f
            while scan:
                bit = scan & -scan
                below = (f & (bit - 1)).bit_count()
                f2 = f ^ bit
                if member[a ^ f2]:
                    row[target[f2]] = -1 if below & 1 else 1
                scan ^= bit
            rows.append(row)
        ranks[p] = fld.rank(rows, len(target))
    out: dict[int, int] = {}
    for p, fs in by_p.items():
        dim = len(fs) - ranks.get(p, 0) - ranks.get(p + 1, 0)
        # A negative dimension would mean the boundary maps fail d*d = 0.
        assert dim >= 0, f"broken complex at degree {bin(a)}"
        if dim:
            out[p] = dim
    return out


def koszul_homology(
    spec: SquarefreeModuleSpec,
    fld: Field = DEFAULT_FIELD,
    max_vars: int = MAX_KOSZUL_VARS,
) -> KoszulSummary:
    """Multigraded Betti numbers, projective dimension, and depth of ``spec``.

    Every Betti multidegree of a squarefree module divides the union of the
    generator supports of numerator and denominator, so only those degrees are
    scanned.  The zero module reports pd None and infinite depth.
    """
    n = spec.n
    if n > max_vars:
        raise SizeLimitExceeded(
            f"koszul homology is capped at {max_vars} variables, got {n}"
        )
    union = spec.support_union
    member = bytearray(1 << n)
    for m in _submasks(union):
        member[m] = spec.member_mask(m)

    betti: dict[tuple[int, int], int] = {}
    for a in _submasks(union):
        for p, dim in _degree_homology(spec, a, member, fld).items():
            betti[(p, a)] = dim
    if not betti:
        return KoszulSummary(n, fld.name, {}, None, math.inf)
    pd = max(p for p, _ in betti)
    return KoszulSummary(n, fld.name, betti, pd, n - pd)


def depth(
    target: SquarefreeModuleSpec | QuotientInstance,
    fld: Field = DEFAULT_FIELD,
) -> float:
    """Depth over the given field; accepts a module spec or a quotient instance."""
    if isinstance(target, QuotientInstance):
        target = SquarefreeModuleSpec.quotient(target)
    return koszul_homology(target, fld).depth


@dataclass(frozen=True)
class FieldComparison:
    depths: Mapping[str, float]

    @property
    def field_sensitive(self) -> bool:
        return len(set(self.depths.values())) > 1


def depth_by_fields(
    target: SquarefreeModuleSpec | QuotientInstance,
    fields: Sequence[Field],
) -> FieldComparison:
    """Depth over several fields side by side; disagreements stay visible."""
    if isinstance(target, QuotientInstance):
        target = SquarefreeModuleSpec.quotient(target)
    return FieldComparison(
        {fld.name: koszul_homology(target, fld).depth for fld in fields}
    )


# --------------------------------------------------------------------------
# Independent oracle: mapping cone of Taylor complexes.
# --------------------------------------------------------------------------


def _rank_fractions(rows: list[dict[int, int]], ncols: int) -> int:
    dense = [[Fraction(row.get(j, 0)) for j in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(dense)) if dense[i][col]), None)
        if pivot is None:
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        head = dense[rank][col]
        dense[rank] = [x / head for x in dense[rank]]
        for i in range(len(dense)):
            if i != rank and dense[i][col]:
                factor = dense[i][col]
                dense[i] = [x - factor * y for x, y in zip(dense[i], dense[rank])]
        rank += 1
    return rank


def _rank_mod(rows: list[dict[int, int]], ncols: int, p: int) -> int:
    dense = [[row.get(j, 0) % p for j in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(dense)) if dense[i][col]), None)
        if pivot is None:
            continue
        dense[rank], dense[pivot] = dense[pivot], dense[rank]
        inv = pow(dense[rank][col], p - 2, p)
        dense[rank] = [x * inv % p for x in dense[rank]]
        for i in range(len(dense)):
            if i != rank and dense[i][col]:
                factor = dense[i][col]
                dense[i] = [
                    (x - factor * y) % p for x, y in zip(dense[i], dense[rank])
                ]
        rank += 1
    return rank


def _oracle_rank(rows: list[dict[int, int]], ncols: int, fld: Field) -> int:
    name = fld.name
    if name == "q":
        return _rank_fractions(rows, ncols)
    if name == "gf2":
        return _rank_mod(rows, ncols, 2)
    if name.startswith("gfp:"):
        return _rank_mod(rows, ncols, int(name[4:]))
    raise ValueError(f"oracle cannot interpret field {name!r}")


def _subset_lcm(gens: Sequence[Monomial], subset: tuple[int, ...]) -> int:
    mask = 0
    for i in subset:
        mask |= gens[i].mask
    return mask


def _perm_sign(seq: Sequence[int]) -> int:
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[j] < seq[i]:
                sign = -sign
    return sign


def taylor_depth_oracle(
    spec: SquarefreeModuleSpec,
    fld: Field = DEFAULT_FIELD,
    bound: int = MAX_TAYLOR_GENS,
) -> float:
    """Depth via the cone of a comparison map between two Taylor complexes.

    The denominator's Taylor complex maps into the numerator's by sending each
    denominator generator to the first numerator generator dividing it; the
    cone resolves the quotient, and its Betti numbers over the field are read
    off after tensoring down.  Uses its own rank elimination so the answer is
    independent of the Koszul route.
    """
    from itertools import combinations

    n = spec.n
    num_gens: Sequence[Monomial]
    if spec.numerator is None:
        num_gens = ()
    else:
        num_gens = spec.numerator.generators
    den_gens = spec.denominator.generators
    total = len(num_gens) + len(den_gens)
    if total > bound:
        raise SizeLimitExceeded(
            f"taylor oracle is capped at {bound} generators total, got {total}"
        )

    # Basis bookkeeping.  F_p: subsets of numerator generators of size p+1 for
    # an ideal numerator, or the single empty subset at p=0 for the ring.
    # G_p: same over the denominator.  Cone_p = G_{p-1} + F_p.
    def taylor_basis(gens: Sequence[Monomial], ring: bool) -> dict[int, list[tuple[int, ...]]]:
        if ring:
            return {0: [()]}
        out: dict[int, list[tuple[int, ...]]] = {}
        for p in range(len(gens)):
            out[p] = list(combinations(range(len(gens)), p + 1))
        return out

    ring_mode = spec.numerator is None
    f_basis = taylor_basis(num_gens, ring_mode)
    g_basis = taylor_basis(den_gens, False) if den_gens else {}

    f_lcm = {
        (p, s): _subset_lcm(num_gens, s) if s else 0
        for p, subs in f_basis.items()
        for s in subs
    }
    g_lcm = {
        (p, s): _subset_lcm(den_gens, s)
        for p, subs in g_basis.items()
        for s in subs
    }

    # Comparison map on generators: each denominator generator maps to the
    # first numerator generator dividing it (ring mode: to the ring unit).
    sigma: list[int] = []
    if not ring_mode:
        for b in den_gens:
            img = next(
                (i for i, a in enumerate(num_gens) if a.divides(b)), None
            )
            if img is None:
                raise ValueError(
                    f"denominator generator {b} not inside the numerator ideal"
                )
            sigma.append(img)

    max_p = max(
        [p + 1 for p in g_basis] + [p for p in f_basis] + [0]
    )

    def cone_basis(p: int) -> list[tuple[str, tuple[int, ...]]]:
        out = [("g", s) for s in g_basis.get(p - 1, [])]
        out += [("f", s) for s in f_basis.get(p, [])]
        return out

    indices = {
        p: {key: i for i, key in enumerate(cone_basis(p))} for p in range(max_p + 2)
    }

    def taylor_rows(
        s: tuple[int, ...],
        lcms: dict[tuple[int, tuple[int, ...]], int],
        gens: Sequence[Monomial],
        p: int,
        kind: str,
        target: dict,
        sign_flip: int,
    ) -> dict[int, int]:
        row: dict[int, int] = {}
        my_lcm = lcms[(p, s)]
        for pos in range(len(s)):
            sub = s[:pos] + s[pos + 1 :]
            if not sub:
                continue  # the Taylor complex of an ideal stops at single generators
            if lcms[(p - 1, sub)] != my_lcm:
                continue  # nonunit coefficient dies after tensoring with the field
            key = (kind, sub)
            if key in target:
                sign = -1 if pos & 1 else 1
                row[target[key]] = row.get(target[key], 0) + sign * sign_flip
        return row

    def differential(p: int) -> list[dict[int, int]]:
        rows = []
        target = indices[p - 1]
        for kind, s in cone_basis(p):
            if kind == "f":
                if p == 0:
                    rows.append({})
                    continue
                rows.append(taylor_rows(s, f_lcm, num_gens, p, "f", target, 1))
                continue
            # g component in cone degree p means Taylor degree p-1.
            row = taylor_rows(s, g_lcm, den_gens, p - 1, "g", target, -1)
            # comparison part: lands in F_{p-1}.
            if ring_mode:
                # All numerator lcms are the unit; only the empty subset
                # exists, and the map hits it only for single generators of
                # degree zero, which cannot happen.
                pass
            else:
                images = [sigma[j] for j in s]
                if len(set(images)) == len(images):
                    tau = tuple(sorted(images))
                    if f_lcm[(p - 1, tau)] == g_lcm[(p - 1, s)]:
                        idx = target.get(("f", tau))
                        if idx is not None:
                            sign = _perm_sign(images)
                            row[idx] = row.get(idx, 0) + sign
            rows.append(row)
        return rows

    dims = {p: len(cone_basis(p)) for p in range(max_p + 2)}
    ranks = {
        p: _oracle_rank(differential(p), dims[p - 1], fld)
        for p in range(1, max_p + 2)
        if dims[p] and dims.get(p - 1)
    }
    pd: Optional[int] = None
    for p in range(max_p + 1):
        dim = dims.get(p, 0) - ranks.get(p, 0) - ranks.get(p + 1, 0)
        assert dim >= 0, "broken cone differential"
        if dim > 0:
            pd = p
    if pd is None:
        return math.inf
    return n - pd


# --------------------------------------------------------------------------
# The three depth inequalities of a short exact sequence.
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DepthLemmaReport:
    depth_sub: float
    depth_mid: float
    depth_quot: float
    ok_mid: bool
    ok_sub: bool
    ok_quot: bool

    @property
    def ok(self) -> bool:
        return self.ok_mid and self.ok_sub and self.ok_quot


def verify_depth_lemma(
    sub: SquarefreeModuleSpec,
    mid: SquarefreeModuleSpec,
    quot: SquarefreeModuleSpec,
    fld: Field = DEFAULT_FIELD,
) -> DepthLemmaReport:
    """Check the depth inequalities along 0 -> sub -> mid -> quot -> 0.

    Raises ValueError (naming the first failing multidegree) unless the three
    modules form a componentwise exact sequence of squarefree modules: sub
    must sit inside mid and quot must be exactly the complement.
    """
    n = sub.n
    if mid.n != n or quot.n != n:
        raise ValueError("all three modules must share the ambient ring")
    for mask in range(1 << n):
        in_sub = sub.member_mask(mask)
        in_mid = mid.member_mask(mask)
        in_quot = quot.member_mask(mask)
        if in_sub and not in_mid:
            raise ValueError(
                f"not exact at {Monomial(mask, n)}: sub escapes mid"
            )
        if in_quot != (in_mid and not in_sub):
            raise ValueError(
                f"not exact at {Monomial(mask, n)}: quotient does not match"
            )
    d_sub = koszul_homology(sub, fld).depth
    d_mid = koszul_homology(mid, fld).depth
    d_quot = koszul_homology(quot, fld).depth
    return DepthLemmaReport(
        depth_sub=d_sub,
        depth_mid=d_mid,
        depth_quot=d_quot,
        ok_mid=d_mid >= min(d_sub, d_quot),
        ok_sub=d_sub >= min(d_mid, d_quot + 1),
        ok_quot=d_quot >= min(d_sub - 1, d_mid),
    )
