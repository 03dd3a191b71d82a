"""Self-checks run by ``hilldet verify``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .eigen import eigenvalues
from .hill import assemble
from .oracles import quartic_fd_levels
from .oscillator import REFERENCE_PARAMS, OscillatorParams
from .series import exact_coefficients, omega_via_determinant, sigma_via_determinant
from .spectrum import compute_spectrum
from .wavefunction import extract_wavefunction

__all__ = ["CheckOutcome", "determinant_equivalence", "trace_identity", "pt_identity",
           "hermitian_oracle", "run_all"]


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    detail: str


def determinant_equivalence(m_max: int = 8) -> CheckOutcome:
    """Determinant formulas against exact forward recursion on a 3x3x3 rational grid."""
    grid = [Fraction(1, 2), Fraction(2), Fraction(7, 3)]
    mismatches = 0
    cases = 0
    for E, beta, s in itertools.product(grid, [Fraction(-1), Fraction(1, 3), Fraction(2)], grid):
        p = OscillatorParams(beta=beta, c=Fraction(1), delta=Fraction(1), s=s)
        sig = exact_coefficients(p, E, 1, 0, m_max + 2)
        omg = exact_coefficients(p, E, 0, 1, m_max + 2)
        for m in range(m_max + 1):
            cases += 1
            if sigma_via_determinant(p, E, m).sigma_or_omega != sig[m + 2]:
                mismatches += 1
            if omega_via_determinant(p, E, m).sigma_or_omega != omg[m + 2]:
                mismatches += 1
    return CheckOutcome(
        "determinant-equivalence", mismatches == 0, f"{mismatches} mismatches in {2 * cases} exact comparisons"
    )


def trace_identity(sizes=(15, 20, 25, 30, 35), rtol: float = 1e-8) -> CheckOutcome:
    worst = 0.0
    for n in sizes:
        hill = assemble(REFERENCE_PARAMS, n)
        total = eigenvalues(hill.entries).eigenvalues.sum()
        worst = max(worst, abs(total - hill.trace()) / abs(hill.trace()))
    return CheckOutcome("trace-identity", worst <= rtol, f"max relative error {worst:.3g}")


def pt_identity(n: int = 35, samples: int = 20, rtol: float = 1e-12) -> CheckOutcome:
    wf = extract_wavefunction(REFERENCE_PARAMS, n, 0)
    xs = np.linspace(0.05, 0.95, samples) * wf.trust_radius
    worst = 0.0
    for x in xs:
        plus, minus = wf(x), wf(-x)
        worst = max(worst, abs(minus - np.conj(plus)) / max(abs(plus), 1e-300))
    return CheckOutcome("pt-identity", worst <= rtol, f"max relative deviation {worst:.3g}")


def hermitian_oracle(n: int = 60, atol: float = 1e-5) -> CheckOutcome:
    hd = compute_spectrum(OscillatorParams(beta=0.0, c=0.0, delta=0.0, s=2.0), n, 1).levels[0]
    ref = quartic_fd_levels(1)[0]
    err = abs(hd - ref)
    return CheckOutcome("hermitian-oracle", err <= atol, f"HD {hd.real:.10f} vs FD {ref:.10f}")


def run_all() -> list[CheckOutcome]:
    return [determinant_equivalence(), trace_identity(), pt_identity(), hermitian_oracle()]
