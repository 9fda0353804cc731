"""Exact rank computations over GF(2), GF(p), and the rationals.

Matrices are small and extremely sparse (entries in {-1, 0, 1}), so each field
gets a representation suited to it: bitset rows for GF(2), flat int rows with
modular inverses for GF(p), and fraction-free Bareiss elimination over the
integers for the rationals.  Nothing here is approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

SparseMatrix = list[dict[int, int]]
"""Rows as {column: integer entry}; entries are nonzero integers."""


class Field(Protocol):
    name: str

    def rank(self, rows: SparseMatrix, ncols: int) -> int: ...


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class GF2:
    name: str = "gf2"

    def rank(self, rows: SparseMatrix, ncols: int) -> int:
        # Pack each row into one int; eliminate on the lowest set bit.
        packed = []
        for row in rows:
            bits = 0
            for col, val in row.items():
                if val & 1:
                    bits |= 1 << col
            if bits:
                packed.append(bits)
        pivots: dict[int, int] = {}
        rank = 0
        for bits in packed:
            while bits:
                low = bits & -bits
                pivot = pivots.get(low)
                if pivot is None:
                    pivots[low] = bits
                    rank += 1
                    break
                bits ^= pivot
        return rank


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"gfp:{self.p}"

    def rank(self, rows: SparseMatrix, ncols: int) -> int:
        p = self.p
        dense = []
        for row in rows:
            vec = [0] * ncols
            nonzero = False
            for col, val in row.items():
                v = val % p
                vec[col] = v
                nonzero = nonzero or v
            if nonzero:
                dense.append(vec)
        rank = 0
        col = 0
        while rank < len(dense) and col < ncols:
            pivot_row = next(
                (i for i in range(rank, len(dense)) if dense[i][col]), None
            )
            if pivot_row is None:
                col += 1
                continue
            dense[rank], dense[pivot_row] = dense[pivot_row], dense[rank]
            inv = pow(dense[rank][col], p - 2, p)
            row = dense[rank]
            for j in range(col, ncols):
                row[j] = row[j] * inv % p
            for i in range(len(dense)):
                if i != rank and dense[i][col]:
                    factor = dense[i][col]
                    target = dense[i]
                    for j in range(col, ncols):
                        target[j] = (target[j] - factor * row[j]) % p
            rank += 1
            col += 1
        return rank


@dataclass(frozen=True)
class Rationals:
    name: str = "q"

    def rank(self, rows: SparseMatrix, ncols: int) -> int:
        # Bareiss fraction-free elimination: all intermediates stay integers,
        # so there is no rounding and no fraction blowup beyond minors.
        dense = []
        for row in rows:
            vec = [0] * ncols
            nonzero = False
            for col, val in row.items():
                vec[col] = val
                nonzero = nonzero or val
            if nonzero:
                dense.append(vec)
        rank = 0
        col = 0
        prev_pivot = 1
        while rank < len(dense) and col < ncols:
            pivot_row = next(
                (i for i in range(rank, len(dense)) if dense[i][col]), None
            )
            if pivot_row is None:
                col += 1
                continue
            dense[rank], dense[pivot_row] = dense[pivot_row], dense[rank]
            pivot = dense[rank][col]
            for i in range(rank + 1, len(dense)):
                target = dense[i]
                head = target[col]
                # The scaling applies to every lower row, zero head included;
                # that is what keeps the divisions exact.
                for j in range(col, ncols):
                    target[j] = (pivot * target[j] - head * dense[rank][j]) // prev_pivot
            prev_pivot = pivot
            rank += 1
            col += 1
        return rank


GF2_FIELD = GF2()
RATIONALS = Rationals()
DEFAULT_FIELD: Field = RATIONALS


def parse_field(spec: str) -> Field:
    """Parse ``gf2``, ``gfp:P`` (P prime), or ``q``."""
    spec = spec.strip().lower()
    if spec == "gf2":
        return GF2_FIELD
    if spec == "q":
        return RATIONALS
    if spec.startswith("gfp:"):
        return PrimeField(int(spec[4:]))
    raise ValueError(f"unknown field spec {spec!r}; expected gf2, gfp:P, or q")


def field_list(specs: Sequence[str] | str) -> list[Field]:
    """Parse a list of field specs (or one comma-separated string), deduplicated."""
    if isinstance(specs, str):
        specs = [s for s in specs.split(",") if s.strip()]
    fields = [parse_field(s) for s in specs]
    seen: set[str] = set()
    unique = []
    for f in fields:
        if f.name not in seen:
            seen.add(f.name)
            unique.append(f)
    return unique
