"""Problem definition for the PT-symmetric quartic oscillator.

The Hamiltonian is

    H = -d^2/dx^2 + x^4 + i*beta*x^3 + c*x^2 + i*delta*x

with real couplings, and the Gaussian-weighted power series
``psi(x) = exp(-s x^2) * sum_n h_n (i x)^n`` turns the Schroedinger
equation into the six-term recurrence

    A_n h_{n+2} + C_n h_n + delta h_{n-1} + theta h_{n-2} - beta h_{n-3} + h_{n-4} = 0

with ``A_n = (n+1)(n+2)``, ``C_n = 4 s n + 2 s - E`` and ``theta = 4 s^2 - c``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from numbers import Real

import numpy as np

__all__ = [
    "OscillatorParams",
    "RecurrenceCoefficients",
    "Regime",
    "DominanceClass",
    "recurrence_coeffs",
    "growth_exponents",
    "classify_dominance",
    "REFERENCE_PARAMS",
]

# relative width of the band around |beta|/(4 sqrt 3) reported as degenerate
DEGENERATE_RTOL = 1e-12


@dataclass(frozen=True)
class OscillatorParams:
    """Couplings of the quartic oscillator and the Gaussian scale ``s``.

    Fields may be floats or exact rationals (``fractions.Fraction``); the
    exact determinant route in :mod:`hilldet.series` relies on the latter.
    """

    beta: Real = 1.0
    c: Real = 1.0
    delta: Real = 1.0
    s: Real = 2.0

    def __post_init__(self):
        for name in ("beta", "c", "delta", "s"):
            value = getattr(self, name)
            if not isinstance(value, Real) or isinstance(value, bool):
                raise TypeError(f"{name} must be a real number, got {value!r}")
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if not self.s > 0:
            raise ValueError(f"s must be positive, got {self.s!r}")

    @property
    def theta(self):
        return 4 * self.s * self.s - self.c

    def potential(self, x):
        """V(x) = x^4 + i beta x^3 + c x^2 + i delta x (vectorised)."""
        x = np.asarray(x, dtype=complex)
        b, c, d = float(self.beta), float(self.c), float(self.delta)
        return x**4 + 1j * b * x**3 + c * x**2 + 1j * d * x


REFERENCE_PARAMS = OscillatorParams(beta=1.0, c=1.0, delta=1.0, s=2.0)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    a_n: int
    c_n: Real
    theta: Real


def recurrence_coeffs(params: OscillatorParams, E, n: int) -> RecurrenceCoefficients:
    """Return ``A_n``, ``C_n`` and ``theta`` for row ``n`` of the recurrence."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    s = params.s
    return RecurrenceCoefficients(
        a_n=(n + 1) * (n + 2),
        c_n=4 * s * n + 2 * s - E,
        theta=params.theta,
    )


class Regime(enum.Enum):
    ABOVE_THRESHOLD = "above-threshold"
    BELOW_THRESHOLD_BETA_POSITIVE = "below-threshold-beta-positive"
    BELOW_THRESHOLD_BETA_NEGATIVE = "below-threshold-beta-negative"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class DominanceClass:
    """Which of the six asymptotic solutions ``h_n(p)`` dominate at large n.

    ``re_gamma[p-1]`` is the real part of the growth exponent of solution p.
    """

    threshold: float
    regime: Regime
    dominant_p: frozenset
    re_gamma: tuple

    @property
    def two_term(self) -> bool:
        return self.regime is not Regime.DEGENERATE

    @property
    def dominant_gamma(self) -> float:
        return max(self.re_gamma)


def growth_exponents(params: OscillatorParams) -> np.ndarray:
    """Complex exponents ``gamma(p) = s lambda(p)^4 - beta lambda(p)/4``, p = 1..6.

    ``lambda(p) = exp(i (2p-1) pi / 6)`` are the sixth roots of -1 picked out by
    the two-term balance between ``h_{n+2}`` and ``h_{n-4}``.
    """
    p = np.arange(1, 7)
    lam = np.exp(1j * (2 * p - 1) * np.pi / 6)
    return float(params.s) * lam**4 - float(params.beta) * lam / 4


def classify_dominance(params: OscillatorParams, rtol: float = DEGENERATE_RTOL) -> DominanceClass:
    beta, s = float(params.beta), float(params.s)
    threshold = abs(beta) / (4 * math.sqrt(3))
    re_gamma = growth_exponents(params).real
    # exact zeros of the symmetric pairs; the closed form is cleaner than cos(pi/2)
    re_gamma[1] = re_gamma[4] = s
    re_gamma = tuple(float(g) for g in re_gamma)

    lhs = 4 * math.sqrt(3) * s
    if beta == 0:
        # parity-symmetric case: the 1/6 and 3/4 pairs coincide and no
        # separation of the six solutions is claimed
        return DominanceClass(threshold, Regime.DEGENERATE, frozenset(range(1, 7)), re_gamma)
    if abs(lhs - abs(beta)) <= rtol * max(lhs, abs(beta)):
        top = max(re_gamma)
        tol = 1e-9 * max(1.0, abs(top))
        dominant = frozenset(p for p, g in enumerate(re_gamma, start=1) if top - g <= tol)
        return DominanceClass(threshold, Regime.DEGENERATE, dominant, re_gamma)
    if lhs > abs(beta):
        return DominanceClass(threshold, Regime.ABOVE_THRESHOLD, frozenset({2, 5}), re_gamma)
    if beta > 0:
        return DominanceClass(
            threshold, Regime.BELOW_THRESHOLD_BETA_POSITIVE, frozenset({3, 4}), re_gamma
        )
    return DominanceClass(
        threshold, Regime.BELOW_THRESHOLD_BETA_NEGATIVE, frozenset({1, 6}), re_gamma
    )
