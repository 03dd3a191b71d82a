"""Exact determinants over the integers and rationals."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

__all__ = ["bareiss_determinant", "rational_determinant", "to_fraction"]


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions and finite floats exactly; refuse anything else."""
    if isinstance(value, bool):
        raise TypeError("booleans are not accepted as rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"{value!r} is not a finite rational")
        return Fraction(value)
    if isinstance(value, (np.integer, np.floating)):
        return to_fraction(value.item())
    raise TypeError(f"{value!r} ({type(value).__name__}) is not an exact rational")


def bareiss_determinant(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate entry is itself a minor of the input, so the divisions
    are exact and the integers never grow beyond Hadamard's bound.
    """
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rational_determinant(matrix) -> Fraction:
    """Exact determinant of a rational matrix.

    Each row is scaled to integers by the lcm of its denominators before the
    Bareiss elimination; the row scales are divided out at the end.
    """
    rows = [[to_fraction(v) for v in row] for row in matrix]
    scale = 1
    int_rows = []
    for row in rows:
        lcm = 1
        for v in row:
            lcm = math.lcm(lcm, v.denominator)
        scale *= lcm
        int_rows.append([int(v * lcm) for v in row])
    return Fraction(bareiss_determinant(int_rows), scale)
