"""Energy levels from the truncated Hill matrix and truncation sweeps."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .eigen import ConvergenceError, eigenvalues
from .hill import assemble
from .oscillator import OscillatorParams

__all__ = [
    "REALITY_TOL",
    "Spectrum",
    "ConvergenceReport",
    "SpectrumError",
    "sort_levels",
    "compute_spectrum",
    "convergence_sweep",
]

REALITY_TOL = 1e-8


class SpectrumError(RuntimeError):
    pass


def sort_levels(values) -> np.ndarray:
    """Ascending real part, ties broken by imaginary part."""
    values = np.asarray(values, dtype=complex)
    return values[np.lexsort((values.imag, values.real))]


@dataclass(frozen=True, eq=False)
class Spectrum:
    n: int
    levels: np.ndarray
    reality_flags: np.ndarray
    params: OscillatorParams = field(repr=False)
    reality_tol: float = REALITY_TOL

    @property
    def energies(self) -> np.ndarray:
        return self.levels.real

    @property
    def all_real(self) -> bool:
        return bool(np.all(self.reality_flags))


def _reality(levels: np.ndarray, tol: float) -> np.ndarray:
    return np.abs(levels.imag) <= tol * (1.0 + np.abs(levels.real))


def compute_spectrum(
    params: OscillatorParams, n: int, k: int, *, reality_tol: float = REALITY_TOL
) -> Spectrum:
    """The ``k`` lowest eigenvalues of the ``n x n`` Hill matrix.

    Complex-conjugate pairs among them are kept and flagged, not dropped.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    hill = assemble(params, n)
    try:
        vals = eigenvalues(hill.entries).eigenvalues
    except ConvergenceError as exc:
        raise SpectrumError(f"eigensolver failed for N={n}, params={params}: {exc}") from exc
    levels = sort_levels(vals)[:k]
    return Spectrum(n, levels, _reality(levels, reality_tol), params, reality_tol)


@dataclass(frozen=True, eq=False)
class ConvergenceReport:
    """Lowest ``k`` levels at each truncation in ``n_values``.

    ``deltas[j]`` holds ``|E(n_values[j+1]) - E(n_values[j])|`` for every level;
    ``converged_digits`` is read off the last row.
    """

    n_values: tuple
    energies: np.ndarray
    deltas: np.ndarray
    converged_digits: np.ndarray
    spectra: tuple = field(repr=False, default=())

    @property
    def levels(self) -> int:
        return self.energies.shape[1]


def _digits(delta: float, energy: float) -> int:
    if delta == 0.0:
        return 15
    d = math.floor(-math.log10(delta / (1.0 + abs(energy))))
    return min(15, max(0, d))


def convergence_sweep(
    params: OscillatorParams, n_values, k: int, *, max_workers: int | None = None
) -> ConvergenceReport:
    """Run :func:`compute_spectrum` for every truncation and compare neighbours.

    Levels are paired across truncations by their sorted position.  With
    ``max_workers`` the truncations run on a thread pool; the report is
    ordered by ``n_values`` either way.
    """
    n_values = tuple(int(n) for n in n_values)
    if not n_values:
        raise ValueError("n_values is empty")
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError(f"n_values must be strictly increasing, got {n_values}")
    if n_values[0] < k:
        raise ValueError(f"smallest truncation {n_values[0]} is below k={k}")

    def one(n):
        return compute_spectrum(params, n, k)

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            spectra = tuple(pool.map(one, n_values))
    else:
        spectra = tuple(one(n) for n in n_values)

    energies = np.array([sp.energies for sp in spectra])
    deltas = np.abs(np.diff(energies, axis=0))
    if len(deltas):
        digits = np.array([_digits(d, e) for d, e in zip(deltas[-1], energies[-1])])
    else:
        digits = np.zeros(k, dtype=int)
    return ConvergenceReport(n_values, energies, deltas, digits, spectra)
