"""Exact rational scalars, vectors, and matrices.

Everything downstream (representation conversion, incidence, graph
construction) assumes arithmetic is exact.  This module provides the
substrate: `fractions.Fraction` scalars (always stored in lowest terms with a
positive denominator), a thin immutable matrix type, and fraction-managed
Gaussian elimination for rank, affine solving, inversion, and null spaces.

Coefficients coming out of conversions on integer data can grow large;
arbitrary-precision integers are mandatory, which `Fraction` gives us for
free.  No floating point appears anywhere in this package's geometry.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

# Exact rational scalar used across the package.
Rational = Fraction

Vector = tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse the shared text syntax: optional sign, integer, optional "/den".

    Decimal notation is rejected on purpose; every file format of this
    package uses this exact syntax.
    """
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise ValueError(f"not an exact rational literal: {text!r}")
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den)) if den else Fraction(int(num))


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class QMatrix:
    """Immutable row-major matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Iterable[Sequence]) -> "QMatrix":
        rows = [tuple(Fraction(x) for x in row) for row in data]
        if not rows:
            return cls(0, 0, ())
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]


def row_echelon(rows: list[list[Fraction]]) -> list[int]:
    """Reduce `rows` in place to reduced row-echelon form.

    Returns the pivot column indices.  Plain fraction-managed elimination:
    exactness is the contract, the elimination strategy is internal.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def matrix_rank(data: Iterable[Sequence]) -> int:
    rows = [[Fraction(x) for x in row] for row in data]
    return len(row_echelon(rows))


def rank(m: QMatrix) -> int:
    """Rank of `m` over the rationals, computed exactly."""
    return matrix_rank(m.row_lists())


def solve_affine(a: QMatrix, b: Sequence) -> Vector | None:
    """One exact solution of a.x = b, or None if the system is inconsistent.

    When the solution is unique it is the unique one; otherwise free
    variables are set to zero.
    """
    if a.rows != len(b):
        raise ValueError("b length must match row count")
    aug = [list(a.row(i)) + [Fraction(b[i])] for i in range(a.rows)]
    pivots = row_echelon(aug)
    if a.cols in pivots:
        return None  # pivot in the constant column: inconsistent
    x = [Fraction(0)] * a.cols
    for r, c in enumerate(pivots):
        x[c] = aug[r][a.cols]
    return tuple(x)


def invert(rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Exact inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    pivots = row_echelon(aug)
    if pivots != list(range(n)):
        return None
    return [r[n:] for r in aug]


def nullspace(data: Iterable[Sequence]) -> list[Vector]:
    """Basis of the right null space of the given rows."""
    rows = [[Fraction(x) for x in row] for row in data]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to primitive integers.

    The zero vector maps to itself.  The direction (sign pattern) is kept,
    so this is safe for inequality rows and for cone rays.
    """
    fracs = [Fraction(x) for x in vec]
    den = 1
    for q in fracs:
        den = den * q.denominator // gcd(den, q.denominator)
    ints = [int(q * den) for q in fracs]
    g = 0
    for z in ints:
        g = gcd(g, z)
    if g == 0:
        return tuple(ints)
    return tuple(z // g for z in ints)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))
