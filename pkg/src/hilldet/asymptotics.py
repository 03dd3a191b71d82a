"""Large-n behaviour of the Taylor coefficients.

Every solution of the recurrence decays like ``lambda^n g_n / (3^(1/3))^n
Gamma(1 + n/3)`` with a slowly varying ``g_n = exp(gamma n^(2/3) + O(n^(1/3)))``.
This module strips the factorial envelope off computed coefficients, fits the
remaining growth law and compares it with the dominant exponent predicted by
:func:`hilldet.oscillator.classify_dominance`.
"""

from __future__ import annotations

import csv
import io
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .oscillator import OscillatorParams, Regime, classify_dominance
from .series import TaylorCoefficients

__all__ = [
    "BLOCK",
    "GrowthAnalysis",
    "extract_g_sequence",
    "block_envelope",
    "fit_growth_rate",
    "verify_convergence_radius",
    "growth_csv",
]

# lambda(p)^12 = 1, so the beat between conjugate dominant solutions repeats every 12 terms
BLOCK = 12
MIN_POINTS = 200
MIN_WINDOW_START = 500


@dataclass(frozen=True, eq=False)
class GrowthAnalysis:
    fit_window: tuple
    fitted_gamma: float
    fitted_subleading: float
    fitted_constant: float
    residual_rms: float
    predicted_gamma: float
    dominant_p: frozenset
    envelope_n: np.ndarray
    g_magnitudes: np.ndarray

    @property
    def relative_error(self) -> float:
        """``|fitted - predicted| / |predicted|`` (NaN without a prediction)."""
        if not math.isfinite(self.predicted_gamma) or self.predicted_gamma == 0:
            return math.nan
        return abs(self.fitted_gamma - self.predicted_gamma) / abs(self.predicted_gamma)

    def model(self, n) -> np.ndarray:
        n = np.asarray(n, dtype=float)
        return (
            self.fitted_gamma * n ** (2.0 / 3.0)
            + self.fitted_subleading * n ** (1.0 / 3.0)
            + self.fitted_constant
        )


def _log_abs(coeffs) -> np.ndarray:
    if isinstance(coeffs, TaylorCoefficients):
        return coeffs.log_abs()
    return np.asarray(coeffs, dtype=float)


def extract_g_sequence(coeffs) -> np.ndarray:
    """``y_n = ln|h_n| + (n/3) ln 3 + lnGamma(1 + n/3)``.

    Accepts :class:`TaylorCoefficients` or an array of ``ln|h_n|``.  Exact
    zeros come back as NaN and are skipped by the fits.
    """
    log_h = _log_abs(coeffs)
    n = np.arange(len(log_h), dtype=float)
    y = log_h + n / 3.0 * math.log(3.0) + gammaln(1.0 + n / 3.0)
    return np.where(np.isfinite(log_h), y, np.nan)


def block_envelope(y, window, block: int = BLOCK):
    """Maximum of ``y`` over consecutive blocks of ``block`` indices inside ``window``.

    Returns the indices of the block maxima and their values; blocks that
    are entirely NaN are dropped.
    """
    lo, hi = window
    y = np.asarray(y, dtype=float)
    idx, val = [], []
    for start in range(lo, hi + 1 - block + 1, block):
        seg = y[start : start + block]
        if np.all(np.isnan(seg)):
            continue
        j = int(np.nanargmax(seg))
        idx.append(start + j)
        val.append(seg[j])
    return np.array(idx, dtype=int), np.array(val)


def fit_growth_rate(
    y, window, params: OscillatorParams | None = None, *, block: int = BLOCK
) -> GrowthAnalysis:
    """Least-squares fit of ``gamma n^(2/3) + b n^(1/3) + c`` to the block envelope of ``y``.

    With ``params`` the fit is compared against the real part of the dominant
    growth exponent; in the degenerate regime that comparison is skipped with
    a warning.
    """
    y = np.asarray(y, dtype=float)
    lo, hi = (int(v) for v in window)
    if lo < MIN_WINDOW_START:
        raise ValueError(f"window must start at n >= {MIN_WINDOW_START}, got {lo}")
    if hi >= len(y) or hi <= lo:
        raise ValueError(f"window {window} does not fit a sequence of length {len(y)}")
    usable = np.count_nonzero(np.isfinite(y[lo : hi + 1]))
    if usable < MIN_POINTS:
        raise ValueError(f"only {usable} usable points in window {window}, need {MIN_POINTS}")

    env_n, env_y = block_envelope(y, (lo, hi), block)
    ok = np.isfinite(env_y)
    env_n, env_y = env_n[ok], env_y[ok]
    nf = env_n.astype(float)
    design = np.column_stack([nf ** (2.0 / 3.0), nf ** (1.0 / 3.0), np.ones_like(nf)])
    coef, *_ = np.linalg.lstsq(design, env_y, rcond=None)
    rms = float(np.sqrt(np.mean((env_y - design @ coef) ** 2)))

    predicted, dominant = math.nan, frozenset()
    if params is not None:
        dom = classify_dominance(params)
        dominant = dom.dominant_p
        if dom.regime is Regime.DEGENERATE:
            warnings.warn(
                "degenerate dominance regime: two-term dominance is not guaranteed, "
                "growth comparison skipped",
                RuntimeWarning,
                stacklevel=2,
            )
        else:
            predicted = dom.re_gamma[min(dominant) - 1]

    return GrowthAnalysis(
        fit_window=(lo, hi),
        fitted_gamma=float(coef[0]),
        fitted_subleading=float(coef[1]),
        fitted_constant=float(coef[2]),
        residual_rms=rms,
        predicted_gamma=predicted,
        dominant_p=dominant,
        envelope_n=env_n,
        g_magnitudes=env_y,
    )


def verify_convergence_radius(coeffs, *, block: int = BLOCK) -> bool:
    """True when ``ln|h_n|/n`` ends at or below -1 and keeps falling over the last decade.

    A factorial-type decay ``n^(-n/3)`` passes; a geometric ``r^n`` (finite
    radius of convergence) settles at ``ln r`` and fails.  The decrease is
    judged on block maxima so that isolated near-zeros do not matter.
    """
    log_h = _log_abs(coeffs)
    n_max = len(log_h) - 1
    if n_max < 10:
        raise ValueError("sequence too short to judge the convergence radius")
    n = np.arange(len(log_h), dtype=float)
    with np.errstate(invalid="ignore", divide="ignore"):
        rate = np.where(n > 0, log_h / np.maximum(n, 1.0), np.nan)
    rate[~np.isfinite(rate)] = np.nan
    final = rate[n_max - block + 1 :]
    if np.all(np.isnan(final)) or np.nanmax(final) > -1.0:
        return False
    _, env = block_envelope(rate, (max(1, n_max // 10), n_max), block)
    env = env[np.isfinite(env)]
    return bool(len(env) > 1 and np.all(np.diff(env) < 0))


def growth_csv(y, analysis: GrowthAnalysis, stream=None) -> str | None:
    """Columns ``n, y_n, envelope, fit`` over the fit window."""
    out = stream if stream is not None else io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "y_n", "envelope", "fit"])
    on_env = set(int(k) for k in analysis.envelope_n)
    lo, hi = analysis.fit_window
    for k in range(lo, hi + 1):
        yk = y[k]
        writer.writerow(
            [
                k,
                "nan" if not np.isfinite(yk) else format(float(yk), ".17g"),
                int(k in on_env),
                format(float(analysis.model(k)), ".17g"),
            ]
        )
    if stream is None:
        return out.getvalue()
    return None
