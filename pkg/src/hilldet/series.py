"""Taylor coefficients of the Gaussian-weighted series.

Two independent routes are provided:

* forward recursion in scaled floating point (:func:`generate_coefficients`),
  good to thousands of terms;
* closed determinant formulas in exact rational arithmetic
  (:func:`sigma_via_determinant`, :func:`omega_via_determinant`), together
  with an exact forward recursion (:func:`exact_coefficients`) to check them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import rational_determinant, to_fraction
from .oscillator import OscillatorParams
from .scaled import LN2, ScaledReal, normalize

__all__ = [
    "CoefficientKind",
    "TaylorCoefficients",
    "RationalDeterminantResult",
    "generate_coefficients",
    "sigma_omega",
    "recurrence_residuals",
    "exact_coefficients",
    "determinant_matrix",
    "sigma_via_determinant",
    "omega_via_determinant",
    "M_CAP",
]

# largest matrix index accepted by the exact determinant route
M_CAP = 12


class CoefficientKind(enum.Enum):
    GENERAL = "general"
    SIGMA = "sigma"
    OMEGA = "omega"


@dataclass(frozen=True, eq=False)
class TaylorCoefficients:
    """``h_n = mantissas[n] * 2**exponents[n]`` for ``n = 0 .. n_max``."""

    mantissas: np.ndarray
    exponents: np.ndarray
    kind: CoefficientKind
    h0: float
    h1: float
    energy: float
    params: OscillatorParams = field(repr=False)

    def __post_init__(self):
        self.mantissas.setflags(write=False)
        self.exponents.setflags(write=False)

    @property
    def n_max(self) -> int:
        return len(self.mantissas) - 1

    def __len__(self) -> int:
        return len(self.mantissas)

    def __getitem__(self, n: int) -> ScaledReal:
        return ScaledReal(float(self.mantissas[n]), int(self.exponents[n]))

    @property
    def values(self) -> list[ScaledReal]:
        return [self[n] for n in range(len(self))]

    def log_abs(self) -> np.ndarray:
        """``ln|h_n|`` with ``-inf`` at exact zeros."""
        with np.errstate(divide="ignore"):
            return np.log(np.abs(self.mantissas)) + self.exponents * LN2

    def signs(self) -> np.ndarray:
        return np.sign(self.mantissas)

    def to_float(self) -> np.ndarray:
        """Plain doubles; entries below the double range flush to zero."""
        return np.ldexp(self.mantissas, self.exponents.astype(np.int64).clip(-2000, 2000))


def _check_order(n_max: int) -> None:
    if int(n_max) != n_max or n_max < 2:
        raise ValueError(f"n_max must be an integer >= 2, got {n_max!r}")


def generate_coefficients(
    params: OscillatorParams, E: float, h0: float, h1: float, n_max: int, *, _kind=None
) -> TaylorCoefficients:
    """Run the six-term recurrence forward from ``(h0, h1)`` up to ``h_{n_max}``.

    A sliding window of the last six values shares one binary exponent and is
    rescaled by a power of two after every step, so nothing under- or
    overflows and no rounding is introduced by the rescaling itself.
    """
    _check_order(n_max)
    h0, h1, E = float(h0), float(h1), float(E)
    if h0 == 0.0 and h1 == 0.0:
        raise ValueError("(h0, h1) = (0, 0) defines no state")
    s = float(params.s)
    beta, delta, theta = float(params.beta), float(params.delta), float(params.theta)

    mant = np.zeros(n_max + 1)
    expo = np.zeros(n_max + 1, dtype=np.int64)
    mant[0], expo[0] = normalize(h0)
    mant[1], expo[1] = normalize(h1)

    # window = (h_{n-4}, ..., h_{n+1}) in units of 2**shift
    w4, w3, w2, w1, w0, wp = 0.0, 0.0, 0.0, 0.0, h0, h1
    shift = 0
    for n in range(n_max - 1):
        a_n = (n + 1) * (n + 2)
        c_n = 4.0 * s * n + 2.0 * s - E
        new = -(c_n * w0 + delta * w1 + theta * w2 - beta * w3 + w4) / a_n
        w4, w3, w2, w1, w0, wp = w3, w2, w1, w0, wp, new
        big = max(abs(w4), abs(w3), abs(w2), abs(w1), abs(w0), abs(wp))
        if big != 0.0:
            k = math.frexp(big)[1]
            if k:
                w4, w3, w2 = math.ldexp(w4, -k), math.ldexp(w3, -k), math.ldexp(w2, -k)
                w1, w0, wp = math.ldexp(w1, -k), math.ldexp(w0, -k), math.ldexp(wp, -k)
                shift += k
        if wp != 0.0:
            m, e = math.frexp(wp)
            mant[n + 2] = 2.0 * m
            expo[n + 2] = e - 1 + shift

    if _kind is None:
        _kind = CoefficientKind.GENERAL
    return TaylorCoefficients(mant, expo, _kind, h0, h1, E, params)


def sigma_omega(params: OscillatorParams, E: float, n_max: int):
    """The two fundamental sequences: ``sigma`` from (1, 0) and ``omega`` from (0, 1)."""
    sigma = generate_coefficients(params, E, 1.0, 0.0, n_max, _kind=CoefficientKind.SIGMA)
    omega = generate_coefficients(params, E, 0.0, 1.0, n_max, _kind=CoefficientKind.OMEGA)
    return sigma, omega


def recurrence_residuals(coeffs: TaylorCoefficients) -> np.ndarray:
    """Relative residual of every recurrence row ``n = 0 .. n_max - 2``.

    The six terms of each row are summed in scaled arithmetic and divided by
    the magnitude of the largest participating term.  Rows whose terms all
    vanish report zero.
    """
    p = coeffs.params
    N = coeffs.n_max
    n = np.arange(N - 1)
    s = float(p.s)
    row_coef = [
        ((n + 1) * (n + 2)).astype(float),
        4.0 * s * n + 2.0 * s - coeffs.energy,
        np.full(n.shape, float(p.delta)),
        np.full(n.shape, float(p.theta)),
        np.full(n.shape, -float(p.beta)),
        np.ones(n.shape),
    ]
    offsets = [2, 0, -1, -2, -3, -4]
    mant = np.zeros((6, len(n)))
    expo = np.zeros((6, len(n)), dtype=np.int64)
    for j, (coef, off) in enumerate(zip(row_coef, offsets)):
        idx = n + off
        ok = idx >= 0
        mant[j, ok] = coeffs.mantissas[idx[ok]] * coef[ok]
        expo[j, ok] = coeffs.exponents[idx[ok]]
    # renormalise so that every product has a frexp-style exponent
    fm, fe = np.frexp(mant)
    expo = np.where(mant != 0, expo + fe, np.iinfo(np.int64).min // 2)
    top = expo.max(axis=0)
    rel = np.ldexp(fm, (expo - top).clip(-1100, 0))
    total = np.abs(rel.sum(axis=0))
    largest = np.abs(rel).max(axis=0)
    out = np.zeros(len(n))
    nz = largest > 0
    out[nz] = total[nz] / largest[nz]
    return out


def exact_coefficients(params: OscillatorParams, E, h0, h1, n_max: int) -> list[Fraction]:
    """Forward recursion with every quantity an exact ``Fraction``."""
    _check_order(n_max)
    beta, c, delta, s = (to_fraction(v) for v in (params.beta, params.c, params.delta, params.s))
    E = to_fraction(E)
    theta = 4 * s * s - c
    h = [to_fraction(h0), to_fraction(h1)]

    def at(k):
        return h[k] if k >= 0 else 0

    for n in range(n_max - 1):
        c_n = 4 * s * n + 2 * s - E
        rhs = c_n * at(n) + delta * at(n - 1) + theta * at(n - 2) - beta * at(n - 3) + at(n - 4)
        h.append(-rhs / ((n + 1) * (n + 2)))
    return h


@dataclass(frozen=True)
class RationalDeterminantResult:
    """``sigma_or_omega`` holds ``sigma_{m+2}`` (or ``omega_{m+2}``) recovered from the determinant."""

    m: int
    sigma_or_omega: Fraction
    matrix_determinant: Fraction
    kind: CoefficientKind

    @property
    def index(self) -> int:
        return self.m + 2


def determinant_matrix(params: OscillatorParams, E, m: int, kind: CoefficientKind):
    """Rows 0..m of the linear system for ``h_0 .. h_{m+1}`` with one column dropped.

    The column of ``h_1`` is dropped for sigma (``sigma_1 = 0``) and that of
    ``h_0`` for omega (``omega_0 = 0``).  Entry ``(n, k)`` is the coefficient of
    ``h_k`` in recurrence row ``n``.
    """
    if kind is CoefficientKind.SIGMA:
        columns = [0] + list(range(2, m + 2))
    elif kind is CoefficientKind.OMEGA:
        columns = list(range(1, m + 2))
    else:
        raise ValueError("determinant formulas exist only for sigma and omega")
    beta, c, delta, s = (to_fraction(v) for v in (params.beta, params.c, params.delta, params.s))
    E = to_fraction(E)
    theta = 4 * s * s - c
    band = {-1: delta, -2: theta, -3: -beta, -4: Fraction(1)}
    rows = []
    for n in range(m + 1):
        row = []
        for k in columns:
            if k == n + 2:
                row.append(Fraction((n + 1) * (n + 2)))
            elif k == n:
                row.append(4 * s * n + 2 * s - E)
            else:
                row.append(band.get(k - n, Fraction(0)))
        rows.append(row)
    return rows


def _via_determinant(params, E, m, kind) -> RationalDeterminantResult:
    if int(m) != m or m < 0:
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")
    if m > M_CAP:
        raise ValueError(f"m = {m} exceeds the exact-arithmetic cap {M_CAP}")
    det = rational_determinant(determinant_matrix(params, E, m, kind))
    # the A_k factors on the superdiagonal multiply to (m+1)! (m+2)!
    denom = math.factorial(m + 1) * math.factorial(m + 2)
    value = (-1) ** (m + 1) * det / denom
    return RationalDeterminantResult(m, value, det, kind)


def sigma_via_determinant(params: OscillatorParams, E, m: int) -> RationalDeterminantResult:
    """``sigma_{m+2} = (-1)^(m+1) det Sigma_m / ((m+1)! (m+2)!)`` exactly."""
    return _via_determinant(params, E, m, CoefficientKind.SIGMA)


def omega_via_determinant(params: OscillatorParams, E, m: int) -> RationalDeterminantResult:
    """``omega_{m+2}`` from the determinant of ``Omega_m``."""
    return _via_determinant(params, E, m, CoefficientKind.OMEGA)
