"""Reference computations that share no code path with the Hill-determinant solver.

These back the self-checks of ``hilldet verify`` and the test suite.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.linalg import eigh_tridiagonal

__all__ = ["quartic_fd_levels", "faddeev_leverrier"]


def _fd_levels(k: int, half_width: float, step: float) -> np.ndarray:
    x = np.arange(-half_width + step, half_width, step)
    diag = 2.0 / step**2 + x**4
    off = np.full(len(x) - 1, -1.0 / step**2)
    return eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1), eigvals_only=True)


def quartic_fd_levels(k: int = 1, *, half_width: float = 6.0, step: float = 0.01) -> np.ndarray:
    """Lowest ``k`` levels of ``-psi'' + x^4 psi = E psi`` on the real line.

    Second-order finite differences on ``[-L, L]`` with Dirichlet walls at two
    step sizes, combined by Richardson extrapolation (error O(step^4)).
    """
    coarse = _fd_levels(k, half_width, 2.0 * step)
    fine = _fd_levels(k, half_width, step)
    return (4.0 * fine - coarse) / 3.0


def faddeev_leverrier(matrix) -> list[int]:
    """Characteristic polynomial ``det(x I - A)`` of an integer matrix, highest degree first.

    Exact: all intermediate traces are integers and the division by ``k`` is
    checked to leave no remainder.
    """
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    coeffs = [1]
    m = [[0] * n for _ in range(n)]
    c_prev = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        am = [[sum(a[i][t] * m[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            am[i][i] += c_prev
        m = am
        tr = sum(sum(a[i][t] * m[t][i] for t in range(n)) for i in range(n))
        c = Fraction(-tr, k)
        if c.denominator != 1:
            raise ArithmeticError("non-integer coefficient; input was not an integer matrix")
        c_prev = int(c)
        coeffs.append(c_prev)
    return coeffs
