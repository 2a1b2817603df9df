"""Exact linear algebra over Q via fraction-free (Bareiss) elimination.

Rows with rational entries are first scaled to primitive integer rows; all
elimination then happens in Z with exact divisions.  No floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Number = int | Fraction


def integer_row(row: Sequence[Number]) -> list[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = math.gcd(*ints) if ints else 0
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def echelon(rows: Iterable[Sequence[Number]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    """
    mat = [integer_row(r) for r in rows]
    for r in mat:
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)} in a matrix with {ncols} columns")
    nrows = len(mat)
    prev = 1
    rank = 0
    pivots: list[int] = []
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        p = prow[col]
        for i in range(rank + 1, nrows):
            row = mat[i]
            q = row[col]
            if q == 0:
                if p != prev:
                    for j in range(col + 1, ncols):
                        row[j] = row[j] * p // prev
                continue
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - q * prow[j]) // prev
            row[col] = 0
        prev = p
        pivots.append(col)
        rank += 1
    return mat[:rank], pivots


def rank(rows: Iterable[Sequence[Number]], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows: Iterable[Sequence[Number]], ncols: int) -> list[list[int]]:
    """Integer basis of {x : A x = 0}, one vector per free column."""
    ech, pivots = echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        x: list[Fraction] = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            acc = sum((row[j] * x[j] for j in range(pc + 1, ncols) if row[j] and x[j]), Fraction(0))
            x[pc] = -acc / row[pc]
        basis.append(integer_row(x))
    return basis
