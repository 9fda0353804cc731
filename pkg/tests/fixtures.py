"""Shared test instances.

Each fixture is a small quotient I/J given by (n, d, F, E, J) together with
hand-checked expected data (poset sizes, interval lists, path classifications).
Tests freeze derived numbers (sdepth, depth) as literals next to the fixture
they belong to; the comments say which route produced them.
"""

from stanley.monomials import (
    Monomial,
    QuotientInstance,
    parse_instance,
    parse_monomial,
)


def mono(text: str, n: int) -> Monomial:
    return parse_monomial(text, n)


def monos(text: str, n: int) -> tuple[Monomial, ...]:
    return tuple(parse_monomial(part.strip(), n) for part in text.split(","))


# ---------------------------------------------------------------------------
# WIDE_GAP: n=5, d=1, all five variables as generators, J chosen so that
# sdepth = 3 while depth = 1.  B here equals the full pairwise-lcm set W.
# The five tops c_i below give a disjoint cover [x_i, c_i] of the poset.
# ---------------------------------------------------------------------------

WIDE_GAP = parse_instance(
    """
    n: 5
    d: 1
    F: x1, x2, x3, x4, x5
    E:
    J: x1*x3*x4, x1*x2*x4, x1*x3*x5, x2*x3*x5, x2*x4*x5
    """
)

WIDE_GAP_TOPS = monos("x1*x2*x3, x2*x3*x4, x3*x4*x5, x1*x4*x5, x1*x2*x5", 5)
WIDE_GAP_SDEPTH = 3
WIDE_GAP_DEPTH = 1
# Short exact sequence mates for the depth-lemma check: the middle module S/J
# has depth >= 2 and the quotient S/I has depth 0.
WIDE_GAP_RING_MOD_J_DEPTH_MIN = 2
WIDE_GAP_RING_MOD_I_DEPTH = 0
WIDE_GAP_POSET_SIZE = 20  # 5 + 10 + 5, nothing of degree >= 4 survives J


# ---------------------------------------------------------------------------
# FOUR_CYCLE: n=4, d=2, generators form a 4-cycle of pairs.  The top monomial
# x1*x2*x3*x4 lies in C2 and in C3 simultaneously (it is w_13 = w_24 and all
# its degree-3 divisors are pairwise lcms).
# ---------------------------------------------------------------------------

FOUR_CYCLE = parse_instance(
    """
    n: 4
    d: 2
    F: x1*x2, x2*x3, x3*x4, x1*x4
    E:
    J:
    """
)

FOUR_CYCLE_TOP = mono("x1*x2*x3*x4", 4)
FOUR_CYCLE_S = 4
FOUR_CYCLE_Q = 1


# ---------------------------------------------------------------------------
# SURGERY_A: n=7, d=1, r=4 with two extra degree-2 generators.  Used for the
# full decorated-partition walkthrough: the 12 intervals below form a valid
# decorated partition for b = x1*x6, the path classifications are known, and
# one exchange followed by a promotion turns it into an sdepth-3 witness for
# the whole quotient.
# ---------------------------------------------------------------------------

SURGERY_A = parse_instance(
    """
    n: 7
    d: 1
    F: x1, x2, x3, x4
    E: x5*x6, x5*x7
    J: x1*x7, x2*x7, x3*x7, x4*x7,
       x1*x2*x4, x1*x2*x6, x1*x3*x4, x1*x3*x6, x2*x3*x4,
       x2*x4*x5, x2*x5*x6, x3*x5*x6, x4*x5*x6
    """
)

SURGERY_A_B = mono("x1*x6", 7)
SURGERY_A_S = 16
SURGERY_A_Q = 12

_A = SURGERY_A.n
SURGERY_A_INTERVALS = [
    (mono("x2", _A), mono("x1*x2*x3", _A)),
    (mono("x3", _A), mono("x1*x3*x5", _A)),
    (mono("x4", _A), mono("x1*x4*x6", _A)),
    (mono("x1*x5", _A), mono("x1*x2*x5", _A)),
    (mono("x2*x4", _A), mono("x2*x4*x6", _A)),
    (mono("x2*x5", _A), mono("x2*x3*x5", _A)),
    (mono("x2*x6", _A), mono("x2*x3*x6", _A)),
    (mono("x3*x4", _A), mono("x3*x4*x5", _A)),
    (mono("x3*x6", _A), mono("x3*x4*x6", _A)),
    (mono("x4*x5", _A), mono("x1*x4*x5", _A)),
    (mono("x5*x6", _A), mono("x1*x5*x6", _A)),
    (mono("x5*x7", _A), mono("x5*x6*x7", _A)),
]

# The only poset element of degree 4 in the restricted poset; it is covered by
# the automatic singleton completion.
SURGERY_A_DEG4 = mono("x1*x2*x3*x5", _A)

SURGERY_A_WEAK_NOT_BAD = [monos("x2*x4", _A)]
SURGERY_A_BAD_PATHS = [
    monos("x5*x6", _A),
    monos("x5*x7, x5*x6", _A),
    monos("x5*x7, x5*x6, x1*x5, x2*x5", _A),
]
SURGERY_A_LONG_PATH = monos(
    "x2*x4, x2*x6, x3*x6, x3*x4, x4*x5, x1*x5, x2*x5", _A
)

# T/U/G for start x2*x4 (hand-walked breadth-first closure).
SURGERY_A_T = set(SURGERY_A_LONG_PATH)
SURGERY_A_U = set(
    monos(
        "x2*x4*x6, x2*x3*x6, x3*x4*x6, x3*x4*x5, x1*x4*x5, x1*x2*x5, x2*x3*x5",
        _A,
    )
)

# Surgery plan: exchange at base 4 with w = x2*x4, then promote x1 into the
# vacated top x1*x4*x6 to cover the two poset elements (x1 and x1*x6) that the
# restriction dropped.
SURGERY_A_EXCHANGE = (4, mono("x2*x4", _A))
SURGERY_A_PROMOTE = (mono("x1", _A), mono("x1*x4*x6", _A))
SURGERY_A_FULL_POSET_SIZE = 33


# ---------------------------------------------------------------------------
# SURGERY_B: n=7 companion instance with a denser J.  Known data: the listed
# 8 intervals decorate b = x1*x6, the closure from a1 = x1*x5 is
# T = {x1*x5, x3*x5, x2*x5}, and exchanging base 2 with w = x2*x5 rewrites
# [x2, x1*x2*x3], [x2*x5, x1*x2*x5] into [x2, x1*x2*x5], [x2*x3, x1*x2*x3].
# ---------------------------------------------------------------------------

SURGERY_B = parse_instance(
    """
    n: 7
    d: 1
    F: x1, x2, x3, x4
    E: x5*x6, x5*x7
    J: x1*x7, x2*x4, x2*x6, x2*x7, x3*x6, x3*x7, x4*x6, x4*x7, x3*x4*x5
    """
)

SURGERY_B_B = mono("x1*x6", 7)
SURGERY_B_S = 12
SURGERY_B_Q = 8

_B = SURGERY_B.n
SURGERY_B_INTERVALS = [
    (mono("x2", _B), mono("x1*x2*x3", _B)),
    (mono("x3", _B), mono("x1*x3*x4", _B)),
    (mono("x4", _B), mono("x1*x4*x5", _B)),
    (mono("x1*x5", _B), mono("x1*x3*x5", _B)),
    (mono("x2*x5", _B), mono("x1*x2*x5", _B)),
    (mono("x3*x5", _B), mono("x2*x3*x5", _B)),
    (mono("x5*x6", _B), mono("x1*x5*x6", _B)),
    (mono("x5*x7", _B), mono("x5*x6*x7", _B)),
]

SURGERY_B_A1 = mono("x1*x5", _B)
SURGERY_B_T1 = set(monos("x1*x5, x3*x5, x2*x5", _B))
SURGERY_B_U1 = set(monos("x1*x3*x5, x2*x3*x5, x1*x2*x5", _B))
SURGERY_B_EXCHANGE = (2, mono("x2*x5", _B))
SURGERY_B_EXCHANGED_BASE = (mono("x2", _B), mono("x1*x2*x5", _B))
SURGERY_B_DISPLACED = (mono("x2*x3", _B), mono("x1*x2*x3", _B))

# Follow-up surgery on the same instance: rotate the closure path at its head,
# redo the exchange, and promote x1 into x1*x2*x5 while excluding the ideal
# (x1*x6, x5*x6, x5*x7).  The expected final cover of the surviving poset:
SURGERY_B_ROTATION = (monos("x1*x5, x3*x5, x2*x5", _B), 1)
SURGERY_B_EXCLUDE = monos("x1*x6, x5*x6, x5*x7", _B)
SURGERY_B_PROMOTE = (mono("x1", _B), mono("x1*x2*x5", _B))
SURGERY_B_FINAL_INTERVALS = {
    (mono("x1", _B), mono("x1*x2*x5", _B)),
    (mono("x2", _B), mono("x2*x3*x5", _B)),
    (mono("x3", _B), mono("x1*x3*x4", _B)),
    (mono("x4", _B), mono("x1*x4*x5", _B)),
    (mono("x3*x5", _B), mono("x1*x3*x5", _B)),
    (mono("x1*x2*x3", _B), mono("x1*x2*x3", _B)),
    (mono("x1*x2*x3*x5", _B), mono("x1*x2*x3*x5", _B)),
}


# ---------------------------------------------------------------------------
# TRIPLE_EXCHANGE: n=5, d=1, r=4, B is the full set of ten pairs.  The
# decorated partition for b = x1*x5 admits the chain of three exchanges that
# moves every a_j = x_{j+1}*x5 into a base interval.
# ---------------------------------------------------------------------------

TRIPLE_EXCHANGE = parse_instance(
    """
    n: 5
    d: 1
    F: x1, x2, x3, x4
    E:
    J: x2*x3*x4, x2*x3*x5, x2*x4*x5, x3*x4*x5
    """
)

TRIPLE_EXCHANGE_B = mono("x1*x5", 5)
TRIPLE_EXCHANGE_S = 10
TRIPLE_EXCHANGE_Q = 6

_T = TRIPLE_EXCHANGE.n
TRIPLE_EXCHANGE_INTERVALS = [
    (mono("x2", _T), mono("x1*x2*x3", _T)),
    (mono("x3", _T), mono("x1*x3*x4", _T)),
    (mono("x4", _T), mono("x1*x2*x4", _T)),
    (mono("x2*x5", _T), mono("x1*x2*x5", _T)),
    (mono("x3*x5", _T), mono("x1*x3*x5", _T)),
    (mono("x4*x5", _T), mono("x1*x4*x5", _T)),
]

TRIPLE_EXCHANGE_PB_POSET_SIZE = 18
TRIPLE_EXCHANGE_STEPS = [
    (2, mono("x2*x5", _T)),
    (3, mono("x3*x5", _T)),
    (4, mono("x4*x5", _T)),
]
TRIPLE_EXCHANGE_RESULT = {
    (mono("x2", _T), mono("x1*x2*x5", _T)),
    (mono("x2*x3", _T), mono("x1*x2*x3", _T)),
    (mono("x3", _T), mono("x1*x3*x5", _T)),
    (mono("x3*x4", _T), mono("x1*x3*x4", _T)),
    (mono("x4", _T), mono("x1*x4*x5", _T)),
    (mono("x2*x4", _T), mono("x1*x2*x4", _T)),
}


# ---------------------------------------------------------------------------
# DEPTH_THREE: n=6, d=2 instance whose quotient has depth exactly 3.
# ---------------------------------------------------------------------------

DEPTH_THREE = parse_instance(
    """
    n: 6
    d: 2
    F: x1*x4, x2*x6, x3*x6, x4*x6
    E:
    J: x1*x2*x6, x1*x3*x6, x1*x2*x4, x1*x3*x4
    """
)

DEPTH_THREE_DEPTH = 3


# ---------------------------------------------------------------------------
# R5_TAIL: n=8, d=1, r=5 with both extra generators inside (x7); the smallest
# admissible tail variable is t = 7.  sdepth = 2 and depth <= 2.
# ---------------------------------------------------------------------------

R5_TAIL = parse_instance(
    """
    n: 8
    d: 1
    F: x1, x2, x3, x4, x5
    E: x6*x7, x7*x8
    J: x1*x6, x1*x8, x2*x8, x3*x6, x3*x8,
       x4*x6, x4*x7, x4*x8, x5*x6, x5*x7, x5*x8
    """
)

R5_TAIL_S = 16
R5_TAIL_Q = 15
R5_TAIL_T = 7
R5_TAIL_SDEPTH = 2

R5_TAIL_B = set(
    monos(
        "x1*x2, x1*x3, x1*x4, x1*x5, x1*x7, x2*x3, x2*x4, x2*x5, x2*x6,"
        " x2*x7, x3*x4, x3*x5, x3*x7, x4*x5, x6*x7, x7*x8",
        8,
    )
)
