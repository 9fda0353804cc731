"""Degree-slice bookkeeping around the generators of a quotient.

B and C are the poset slices one and two degrees above the generator degree d;
their sizes s and q, the pairwise lcms w_ij of the degree-d generators, and a
few derived subsets of C (C2, C3, the omegas) are what the theorems' hypotheses
are phrased in, so campaigns and the partition engine both start here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .monomials import (
    Monomial,
    MonomialIdeal,
    PosetSlice,
    QuotientInstance,
    build_poset,
    canonical_gen_sort,
    lcm,
)


@dataclass(frozen=True)
class HypothesisFlags:
    """Which of the supported theorem hypotheses an instance satisfies."""

    r: int
    case_r_le_4: bool
    case_r5_t: Optional[int]
    range_ok: bool  # 2r <= s <= q + r
    range_ok_q4: bool  # 2r <= s <= q + 4, the variant used for r = 4
    omega_obstruction: frozenset[int]

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "case_r_le_4": self.case_r_le_4,
            "case_r5_t": self.case_r5_t,
            "range_ok": self.range_ok,
            "range_ok_q4": self.range_ok_q4,
            "omega_obstruction": sorted(self.omega_obstruction),
        }


@dataclass(frozen=True)
class StructureReport:
    instance: QuotientInstance
    B: tuple[Monomial, ...]
    C: tuple[Monomial, ...]
    s: int
    q: int
    W: frozenset[Monomial]
    C2: tuple[Monomial, ...]
    C3: tuple[Monomial, ...]
    C23: tuple[Monomial, ...]
    omegas: Mapping[int, Monomial]
    flags: HypothesisFlags

    def to_json_dict(self) -> dict:
        return {
            "n": self.instance.n,
            "d": self.instance.d,
            "r": self.instance.r,
            "s": self.s,
            "q": self.q,
            "B": [str(m) for m in self.B],
            "C": [str(m) for m in self.C],
            "W": [str(m) for m in canonical_gen_sort(self.W)],
            "C2": [str(m) for m in self.C2],
            "C3": [str(m) for m in self.C3],
            "C23": [str(m) for m in self.C23],
            "omegas": {i: str(w) for i, w in sorted(self.omegas.items())},
            "flags": self.flags.to_json_dict(),
        }


def pairwise_lcms(F: tuple[Monomial, ...]) -> frozenset[Monomial]:
    return frozenset(
        lcm(F[i], F[j]) for i in range(len(F)) for j in range(i + 1, len(F))
    )


def _flags(
    instance: QuotientInstance,
    B: tuple[Monomial, ...],
    s: int,
    q: int,
    W: frozenset[Monomial],
    C3: tuple[Monomial, ...],
    omegas: Mapping[int, Monomial],
) -> HypothesisFlags:
    r = instance.r
    case_r5_t: Optional[int] = None
    if r == 5:
        used = 0
        for f in instance.F:
            used |= f.mask
        b_minus_e = [b for b in B if b not in set(instance.E)]
        for t in range(1, instance.n + 1):
            bit = 1 << (t - 1)
            if used & bit:
                continue
            if all(e.mask & bit for e in instance.E) and any(
                b.mask & bit for b in b_minus_e
            ):
                case_r5_t = t
                break

    obstruction: set[int] = set()
    if omegas and instance.E:
        c3_not_w = [c for c in C3 if c not in W]
        if c3_not_w:
            c3_ideal = MonomialIdeal.of(instance.n, c3_not_w)
            e_ideal = MonomialIdeal.of(instance.n, instance.E)
            for i, w in omegas.items():
                if w in c3_ideal and w in e_ideal:
                    obstruction.add(i)

    return HypothesisFlags(
        r=r,
        case_r_le_4=r <= 4,
        case_r5_t=case_r5_t,
        range_ok=2 * r <= s <= q + r,
        range_ok_q4=2 * r <= s <= q + 4,
        omega_obstruction=frozenset(obstruction),
    )


def analyze(
    instance: QuotientInstance, poset: Optional[PosetSlice] = None
) -> StructureReport:
    """B, C, s, q, W, the C-subsets, the omegas, and the hypothesis flags."""
    if poset is None:
        poset = build_poset(instance)
    d = instance.d
    B = poset.degree_slice(d + 1)
    C = poset.degree_slice(d + 2)
    W = pairwise_lcms(instance.F)

    f_ideal = MonomialIdeal(instance.n, instance.F)
    e_set = set(instance.E)
    C2 = tuple(c for c in C if c in W)
    C3 = tuple(
        c
        for c in C
        if c in f_ideal
        and all(
            b in W
            for b in B
            if b not in e_set and b.divides(c)
        )
    )
    C23 = canonical_gen_sort(set(C2) | set(C3))

    omegas: dict[int, Monomial] = {}
    if instance.r == 4:
        for i in range(4):
            rest = instance.F[:i] + instance.F[i + 1 :]
            w = rest[0]
            for g in rest[1:]:
                w = lcm(w, g)
            omegas[i + 1] = w

    flags = _flags(instance, B, len(B), len(C), W, C3, omegas)
    return StructureReport(
        instance=instance,
        B=B,
        C=C,
        s=len(B),
        q=len(C),
        W=W,
        C2=C2,
        C3=C3,
        C23=C23,
        omegas=omegas,
        flags=flags,
    )


def detect_hypotheses(
    report: StructureReport, instance: Optional[QuotientInstance] = None
) -> HypothesisFlags:
    """Recompute the hypothesis flags for a report (instance defaults to the report's)."""
    if instance is None:
        instance = report.instance
    return _flags(
        instance, report.B, report.s, report.q, report.W, report.C3, report.omegas
    )


def check_E_degree_normalized(instance: QuotientInstance) -> bool:
    """True iff every extra generator has degree exactly d + 1."""
    return all(e.degree == instance.d + 1 for e in instance.E)
