"""Wave functions of converged levels and the boundary-value cross-check."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .eigen import eigenvalues, eigenvector_near
from .hill import assemble
from .oscillator import OscillatorParams
from .series import generate_coefficients
from .spectrum import REALITY_TOL, sort_levels

__all__ = [
    "TAIL_TOL",
    "WaveFunction",
    "TrustRadiusError",
    "ShootingError",
    "extract_wavefunction",
    "evaluate_psi",
    "verify_by_shooting",
    "schrodinger_residual",
]

# first omitted term / partial sum allowed inside the trust region
TAIL_TOL = 1e-9
_TWO_PI = 2.0 * math.pi


class TrustRadiusError(ValueError):
    def __init__(self, x, radius, tail):
        super().__init__(
            f"|x| = {abs(x):.6g} lies outside the trust radius {radius:.6g}; "
            f"estimated relative tail {tail:.3g} > {TAIL_TOL:g}"
        )
        self.x = x
        self.radius = radius
        self.tail = tail


class ShootingError(RuntimeError):
    pass


def _series_terms(coefficients: np.ndarray, x: float) -> tuple[np.ndarray, np.ndarray]:
    """Real and imaginary contributions of ``h_n (i x)^n`` for real ``x``.

    ``x**n`` is real, and ``i^n`` only routes it to the real or imaginary part
    with a sign, so ``x -> -x`` flips exactly the odd terms.
    """
    n = np.arange(len(coefficients))
    t = coefficients * np.power(x, n.astype(float))
    sign = np.array([1.0, 1.0, -1.0, -1.0])[n % 4]
    t = t * sign
    even = n % 2 == 0
    return t[even], t[~even]


def _partial_sum(coefficients: np.ndarray, x) -> complex:
    x = complex(x)
    if x.imag == 0.0:
        re, im = _series_terms(coefficients, x.real)
        return complex(math.fsum(re), math.fsum(im))
    n = np.arange(len(coefficients))
    terms = coefficients * (1j * x) ** n
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


@dataclass(frozen=True, eq=False)
class WaveFunction:
    """``psi(x) = exp(-s x^2) * sum_{n<N} h_n (i x)^n`` for one level.

    The coefficients are normalised to ``h_0^2 + h_1^2 = 1`` with
    ``h_0 = cos(zeta)`` and ``h_1 = sin(zeta)``.
    """

    energy: float
    zeta: float
    coefficients: np.ndarray
    s: float
    params: OscillatorParams = field(repr=False)

    def __post_init__(self):
        self.coefficients.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def tail_estimate(self, x) -> float:
        """Estimated first omitted term relative to the partial sum at ``x``.

        The omitted ``h_N`` is extrapolated from the last two kept coefficients
        with the ``n^(-1/3)`` ratio of the factorial envelope.
        """
        h = np.abs(self.coefficients)
        N = self.n
        h_next = max(h[-1], h[-2]) * N ** (-1.0 / 3.0)
        r = abs(complex(x))
        if r == 0.0:
            return 0.0
        total = abs(_partial_sum(self.coefficients, x))
        if total == 0.0:
            return math.inf
        return h_next * r**N / total

    @cached_property
    def trust_radius(self) -> float:
        """Largest ``r`` such that the real-axis tail stays below ``TAIL_TOL`` on [0, r]."""
        step = 1e-2
        r = 0.0
        while r < 100.0:
            nxt = r + step
            if self.tail_estimate(nxt) > TAIL_TOL:
                # refine the crossing by bisection
                lo, hi = r, nxt
                for _ in range(40):
                    mid = 0.5 * (lo + hi)
                    if self.tail_estimate(mid) > TAIL_TOL:
                        hi = mid
                    else:
                        lo = mid
                return lo
            r = nxt
        return r

    def __call__(self, x):
        if np.ndim(x) == 0:
            return evaluate_psi(self, x)
        return np.array([evaluate_psi(self, xi) for xi in np.ravel(x)]).reshape(np.shape(x))


def extract_wavefunction(
    params: OscillatorParams, n: int, level: int, *, reality_tol: float = REALITY_TOL
) -> WaveFunction:
    """Eigenvector of the ``n x n`` Hill matrix for the ``level``-th lowest eigenvalue."""
    if not 0 <= level < n:
        raise ValueError(f"level must satisfy 0 <= level < n, got level={level}, n={n}")
    hill = assemble(params, n)
    vals = sort_levels(eigenvalues(hill.entries).eigenvalues)
    E = vals[level]
    if abs(E.imag) > reality_tol * (1.0 + abs(E.real)):
        raise ValueError(f"level {level} has complex energy {E}; PT symmetry is broken there")
    v = eigenvector_near(hill.entries, E.real, known_eigenvalues=vals)
    if np.max(np.abs(v.imag)) > 1e-8 * np.max(np.abs(v.real)):
        raise ValueError(f"eigenvector of level {level} is not real up to a phase")
    h = v.real
    rho = math.hypot(h[0], h[1])
    if rho == 0.0:
        raise ValueError(f"level {level} has h_0 = h_1 = 0 at N = {n}")
    h = h / rho
    if h[0] < 0 or (h[0] == 0 and h[1] < 0):
        h = -h
    zeta = math.atan2(h[1], h[0]) % _TWO_PI
    return WaveFunction(float(E.real), zeta, h, float(params.s), params)


def evaluate_psi(wf: WaveFunction, x) -> complex:
    """Value of the truncated wave function at (possibly complex) ``x``.

    Raises :class:`TrustRadiusError` outside the trust radius.
    """
    x = complex(x)
    radius = wf.trust_radius
    if abs(x) > radius:
        raise TrustRadiusError(x, radius, wf.tail_estimate(x))
    total = _partial_sum(wf.coefficients, x)
    return complex(np.exp(-wf.s * x * x)) * total if x.imag else math.exp(-wf.s * x.real**2) * total


def schrodinger_residual(wf: WaveFunction, x, step: float = 1e-3) -> np.ndarray:
    """Pointwise ``|psi'' - (V - E) psi| / |(V - E) psi|`` with a central second difference."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    psi = wf(x)
    lap = (wf(x + step) - 2.0 * psi + wf(x - step)) / step**2
    rhs = (wf.params.potential(x) - wf.energy) * psi
    return np.abs(lap - rhs) / np.abs(rhs)


def _psi_at_boundary(params, E, zeta, X, m):
    """``psi(X)`` for the full series of length ``m`` started from angle ``zeta``.

    Terms are combined in log scale because ``h_n`` alone underflows long
    before ``h_n X^n`` becomes negligible.  Also returns the log of the last
    term relative to the largest one.
    """
    coeffs = generate_coefficients(params, E, math.cos(zeta), math.sin(zeta), m)
    n = np.arange(len(coeffs))
    lg = coeffs.exponents * math.log(2.0) + n * math.log(X)
    top = lg.max()
    weights = coeffs.mantissas * np.exp(lg - top)
    phase = np.array([1.0, 1j, -1.0, -1j])[n % 4]
    total = np.sum(weights * phase)
    value = total * math.exp(top - float(params.s) * X * X)
    return value, (lg[-1] + math.log(abs(coeffs.mantissas[-1]) or 1e-300)) - top


def verify_by_shooting(
    params: OscillatorParams,
    E_guess: float,
    zeta_guess: float,
    X: float,
    m: int,
    *,
    max_iter: int = 50,
    xtol: float = 1e-10,
    full_output: bool = False,
):
    """Solve ``psi(X) = 0`` for ``(E, zeta)`` by damped Newton iteration.

    For real couplings the coefficients are real and ``psi(-X)`` is the complex
    conjugate of ``psi(X)``, so the single complex condition fixes both ends.
    The Jacobian uses central differences.  Returns ``(E, zeta)``, plus an
    info dict with ``iterations`` and ``residual`` when ``full_output`` is set.
    """
    if X <= 0:
        raise ValueError("X must be positive")
    E, zeta = float(E_guess), float(zeta_guess)
    f, tail = _psi_at_boundary(params, E, zeta, X, m)
    if tail > math.log(1e-17):
        raise ValueError(
            f"m = {m} terms do not resolve the series at X = {X}: "
            f"last term is exp({tail:.1f}) of the largest"
        )

    def residual(E, zeta):
        value, _ = _psi_at_boundary(params, E, zeta, X, m)
        return np.array([value.real, value.imag])

    F = np.array([f.real, f.imag])
    for it in range(1, max_iter + 1):
        hE = 1e-6 * (1.0 + abs(E))
        hz = 1e-6
        J = np.empty((2, 2))
        J[:, 0] = (residual(E + hE, zeta) - residual(E - hE, zeta)) / (2 * hE)
        J[:, 1] = (residual(E, zeta + hz) - residual(E, zeta - hz)) / (2 * hz)
        if not np.all(np.isfinite(J)) or np.linalg.cond(J) > 1e14:
            raise ShootingError(
                f"singular Jacobian at E={E:.10g}, zeta={zeta:.6g}; try a slightly different X"
            )
        step = np.linalg.solve(J, -F)
        lam = 1.0
        for _ in range(20):
            trial = residual(E + lam * step[0], zeta + lam * step[1])
            if np.linalg.norm(trial) < np.linalg.norm(F) or lam < 1e-3:
                break
            lam *= 0.5
        E += lam * step[0]
        zeta += lam * step[1]
        F = trial
        if abs(lam * step[0]) <= xtol * (1.0 + abs(E)) and abs(lam * step[1]) <= xtol:
            result = (E, zeta % _TWO_PI)
            if full_output:
                return result + ({"iterations": it, "residual": float(np.linalg.norm(F))},)
            return result
    raise ShootingError(f"Newton iteration did not converge in {max_iter} steps (E={E:.10g})")
