"""Eigenvalues of real nonsymmetric matrices.

Balancing, Householder reduction to upper Hessenberg form and the implicit
Francis double-shift QR iteration down to real Schur form.  Complex
eigenvalues come out of 2 x 2 diagonal blocks, so they always appear as
exact conjugate pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "EigenDecomposition",
    "ConvergenceError",
    "balance",
    "hessenberg",
    "eigenvalues",
    "eigenvector_near",
]

_RADIX = 2.0


class ConvergenceError(RuntimeError):
    """QR iteration ran out of sweeps; ``block_index`` is the unconverged row."""

    def __init__(self, message, block_index):
        super().__init__(message)
        self.block_index = block_index


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    eigenvalues: np.ndarray
    convergence_iterations: int
    max_residual: float

    def __len__(self):
        return len(self.eigenvalues)


def _as_real_square(matrix) -> np.ndarray:
    a = np.array(matrix, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix contains NaN or Inf")
    return a


def balance(a: np.ndarray) -> np.ndarray:
    """Diagonal similarity by powers of two that equalises row and column norms.

    Works in place and returns ``a``.  Scaling by powers of the radix
    introduces no rounding error.
    """
    n = a.shape[0]
    done = False
    while not done:
        done = True
        for i in range(n):
            c = np.abs(a[:, i]).sum() - abs(a[i, i])
            r = np.abs(a[i, :]).sum() - abs(a[i, i])
            if c == 0.0 or r == 0.0:
                continue
            g = r / _RADIX
            f = 1.0
            s = c + r
            while c < g:
                f *= _RADIX
                c *= _RADIX * _RADIX
            g = r * _RADIX
            while c > g:
                f /= _RADIX
                c /= _RADIX * _RADIX
            if (c + r) / f < 0.95 * s:
                done = False
                a[i, :] /= f
                a[:, i] *= f
    return a


def hessenberg(a: np.ndarray) -> np.ndarray:
    """Reduce to upper Hessenberg form with Householder reflections (in place)."""
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x
        v[0] -= alpha
        vnorm = np.linalg.norm(v)
        if vnorm == 0.0:
            continue
        v /= vnorm
        a[k + 1 :, k:] -= 2.0 * np.outer(v, v @ a[k + 1 :, k:])
        a[:, k + 1 :] -= 2.0 * np.outer(a[:, k + 1 :] @ v, v)
        a[k + 2 :, k] = 0.0
    return a


def _hqr(a: np.ndarray, max_sweeps: int):
    """Francis double-shift QR on an upper Hessenberg matrix (destroys ``a``)."""
    n = a.shape[0]
    wr = np.zeros(n)
    wi = np.zeros(n)
    anorm = np.abs(np.triu(a, -1)).sum()
    nn = n - 1
    t = 0.0
    sweeps = 0
    worst = 0.0
    x = y = w = 0.0
    while nn >= 0:
        its = 0
        while True:
            # look for a single small subdiagonal element
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                if abs(a[l, l - 1]) + s == s:
                    if s > 0:
                        worst = max(worst, abs(a[l, l - 1]) / s)
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = wr[nn] = x + z
                    if z:
                        wr[nn] = x - w / z
                    wi[nn - 1] = wi[nn] = 0.0
                else:
                    wr[nn - 1] = wr[nn] = x + p
                    wi[nn - 1] = z
                    wi[nn] = -z
                nn -= 2
                break

            if sweeps >= max_sweeps:
                raise ConvergenceError(
                    f"QR iteration did not converge after {sweeps} sweeps "
                    f"(active block ends at row {nn})",
                    nn,
                )
            if its and its % 10 == 0:
                # exceptional shift after a run of stalled sweeps
                t += x
                idx = np.arange(nn + 1)
                a[idx, idx] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = y = 0.75 * s
                w = -0.4375 * s * s
            its += 1
            sweeps += 1

            # look for two consecutive small subdiagonal elements
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u + v == v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m + 2:
                    a[i, i - 3] = 0.0

            # chase the bulge from row m down to nn
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = a[k + 2, k - 1] if k != nn - 1 else 0.0
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s == 0.0:
                    continue
                if k == m:
                    if l != m:
                        a[k, k - 1] = -a[k, k - 1]
                else:
                    a[k, k - 1] = -s * x
                p += s
                x = p / s
                y = q / s
                z = r / s
                q /= p
                r /= p
                last = k != nn - 1
                cols = slice(k, nn + 1)
                pv = a[k, cols] + q * a[k + 1, cols]
                if last:
                    pv += r * a[k + 2, cols]
                    a[k + 2, cols] -= pv * z
                a[k + 1, cols] -= pv * y
                a[k, cols] -= pv * x
                rows = slice(l, min(nn, k + 3) + 1)
                pv = x * a[rows, k] + y * a[rows, k + 1]
                if last:
                    pv += z * a[rows, k + 2]
                    a[rows, k + 2] -= pv * r
                a[rows, k + 1] -= pv * q
                a[rows, k] -= pv
    return wr + 1j * wi, sweeps, worst


def eigenvalues(matrix, *, max_sweeps: int | None = None) -> EigenDecomposition:
    """All eigenvalues of a real square matrix, in no particular order.

    The sweep budget defaults to ``30 * N``; an exceptional shift is taken
    after every 10 sweeps that fail to deflate the active block.
    """
    a = _as_real_square(matrix)
    n = a.shape[0]
    if n == 1:
        return EigenDecomposition(np.array([complex(a[0, 0])]), 0, 0.0)
    if max_sweeps is None:
        max_sweeps = 30 * n
    balance(a)
    hessenberg(a)
    vals, sweeps, worst = _hqr(a, max_sweeps)
    return EigenDecomposition(vals, sweeps, worst)


def eigenvector_near(matrix, E, *, known_eigenvalues=None, tol: float = 1e-8) -> np.ndarray:
    """Unit eigenvector for the eigenvalue closest to ``E`` by inverse iteration.

    ``E`` must lie within ``1e-6 * max(1, ||A||_2)`` of the spectrum.  The
    returned vector satisfies ``||(A - E I) v|| <= tol * ||A||_2`` and is
    phased so that its largest component is real and positive.
    """
    a = _as_real_square(matrix)
    n = a.shape[0]
    E = complex(E)
    norm_a = np.linalg.norm(a, 2)
    scale = max(1.0, norm_a)
    if known_eigenvalues is None:
        known_eigenvalues = eigenvalues(a).eigenvalues
    gap = np.min(np.abs(np.asarray(known_eigenvalues) - E))
    if gap > 1e-6 * scale:
        raise ValueError(f"E = {E} is {gap:.3g} away from the nearest eigenvalue")

    dtype = float if E.imag == 0.0 else complex
    target = E.real if dtype is float else E
    eye = np.eye(n)
    # deterministic start with no special alignment to any basis vector
    v = 1.0 + np.arange(n) / (3.0 * n)
    v = v / np.linalg.norm(v)
    for attempt in range(3):
        shift = target + 1e-12 * scale * 10.0 ** (3 * attempt)
        try:
            for _ in range(4):
                v = np.linalg.solve(a - shift * eye, v.astype(dtype))
                v = v / np.linalg.norm(v)
        except np.linalg.LinAlgError:
            continue
        if np.all(np.isfinite(v)):
            break
    else:
        raise np.linalg.LinAlgError(f"inverse iteration broke down near E = {E}")

    v = np.asarray(v, dtype=complex)
    k = np.argmax(np.abs(v))
    v = v * (abs(v[k]) / v[k])
    residual = np.linalg.norm(a @ v - E * v)
    if residual > tol * scale:
        raise ValueError(
            f"eigenvector residual {residual:.3g} exceeds {tol:g} * ||A|| = {tol * scale:.3g}"
        )
    return v
