"""Exact rank and span membership over the rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from octofib.rationals import RationalLike, as_rational


def _integer_rows(rows: Sequence[Sequence[RationalLike]]) -> list[list[int]]:
    out = []
    for row in rows:
        r = [as_rational(v) for v in row]
        den = math.lcm(*(v.denominator for v in r)) if r else 1
        out.append([int(v * den) for v in r])
    return out


def fraction_free_rank(rows: Sequence[Sequence[RationalLike]]) -> int:
    """Rank via Bareiss elimination on integer-scaled rows.

    Every intermediate entry is an exact integer (a minor of the input), so
    no rationals appear during elimination.
    """
    m = _integer_rows(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    coordinates: Optional[tuple[Fraction, ...]] = None  # one per input row
    residual: Optional[tuple[Fraction, ...]] = None  # query minus its projection onto pivot columns


class RowSpace:
    """Reduced row echelon form of a list of rational rows, remembering how
    each reduced row is built from the original rows."""

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        self.rows = [tuple(as_rational(v) for v in r) for r in rows]
        if not self.rows:
            raise ValueError("empty row set")
        width = len(self.rows[0])
        if any(len(r) != width for r in self.rows):
            raise ValueError("ragged rows")
        self.width = width
        k = len(self.rows)
        # augmented [row | combination] with combination = identity initially
        aug = [list(r) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(self.rows)]
        pivots: list[int] = []
        top = 0
        for col in range(width):
            # deterministic pivoting: first nonzero column, smallest row index
            piv = next((r for r in range(top, k) if aug[r][col] != 0), None)
            if piv is None:
                continue
            aug[top], aug[piv] = aug[piv], aug[top]
            inv = 1 / aug[top][col]
            aug[top] = [v * inv for v in aug[top]]
            for r in range(k):
                if r != top and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[top])]
            pivots.append(col)
            top += 1
            if top == k:
                break
        self.pivots = tuple(pivots)
        self._reduced = [r[:width] for r in aug[: len(pivots)]]
        self._combos = [r[width:] for r in aug[: len(pivots)]]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def membership(self, x: Sequence[RationalLike]) -> MembershipResult:
        v = [as_rational(c) for c in x]
        if len(v) != self.width:
            raise ValueError(f"expected a vector of length {self.width}")
        residual = list(v)
        coords = [Fraction(0)] * len(self.rows)
        for col, red, combo in zip(self.pivots, self._reduced, self._combos):
            f = residual[col]
            if f:
                residual = [a - f * b for a, b in zip(residual, red)]
                coords = [c + f * w for c, w in zip(coords, combo)]
        if any(residual):
            return MembershipResult(False, residual=tuple(residual))
        return MembershipResult(True, coordinates=tuple(coords))


def combine(coordinates: Sequence[Fraction], rows: Sequence[Sequence[RationalLike]]) -> tuple[Fraction, ...]:
    width = len(rows[0])
    out = [Fraction(0)] * width
    for c, row in zip(coordinates, rows):
        for i, v in enumerate(row):
            out[i] += c * as_rational(v)
    return tuple(out)
