"""Truncated secular matrix of the Hill-determinant method."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .oscillator import OscillatorParams

__all__ = ["HillMatrix", "assemble"]


@dataclass(frozen=True, eq=False)
class HillMatrix:
    """Energy-independent part of the N x N truncation.

    Row ``i`` holds recurrence row ``i`` acting on ``(h_0, ..., h_{N-1})`` with
    ``h_N = h_{N+1} = 0``.  The energy enters only through the diagonal, so the
    truncated condition ``M(E) h = 0`` holds exactly when ``E`` is an
    eigenvalue of :attr:`entries`.
    """

    n: int
    entries: np.ndarray
    params: OscillatorParams = field(repr=False)

    def __post_init__(self):
        self.entries.setflags(write=False)

    def at_energy(self, E) -> np.ndarray:
        """The full secular matrix ``entries - E * I``."""
        return self.entries - E * np.eye(self.n)

    def trace(self) -> float:
        """Closed form ``2 s N^2`` of the diagonal sum."""
        return 2.0 * float(self.params.s) * self.n**2

    def to_csv(self, stream=None) -> str | None:
        """Row-major dump with 17 significant digits.

        Writes to ``stream`` if given, otherwise returns the text.
        """
        out = stream if stream is not None else io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        for row in self.entries:
            writer.writerow([format(v, ".17g") for v in row])
        if stream is None:
            return out.getvalue()
        return None


def assemble(params: OscillatorParams, n: int) -> HillMatrix:
    if int(n) != n or n < 2:
        raise ValueError(f"truncation order must be an integer >= 2, got {n!r}")
    n = int(n)
    s = float(params.s)
    i = np.arange(n)
    M = np.zeros((n, n))
    M[i, i] = 4.0 * s * i + 2.0 * s
    k = np.arange(n - 2)
    M[k, k + 2] = (k + 1) * (k + 2)
    for offset, value in (
        (1, float(params.delta)),
        (2, float(params.theta)),
        (3, -float(params.beta)),
        (4, 1.0),
    ):
        if offset < n:
            j = np.arange(n - offset)
            M[j + offset, j] = value
    return HillMatrix(n, M, params)
