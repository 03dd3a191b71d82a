"""Hill-determinant solver for the PT-symmetric quartic anharmonic oscillator."""

__version__ = "0.1.0"

from .oscillator import (
    REFERENCE_PARAMS,
    DominanceClass,
    OscillatorParams,
    RecurrenceCoefficients,
    Regime,
    classify_dominance,
    growth_exponents,
    recurrence_coeffs,
)
from .scaled import ScaledReal
from .series import (
    CoefficientKind,
    RationalDeterminantResult,
    TaylorCoefficients,
    exact_coefficients,
    generate_coefficients,
    omega_via_determinant,
    recurrence_residuals,
    sigma_omega,
    sigma_via_determinant,
)
from .hill import HillMatrix, assemble
from .eigen import ConvergenceError, EigenDecomposition, eigenvalues, eigenvector_near
from .spectrum import ConvergenceReport, Spectrum, compute_spectrum, convergence_sweep
from .wavefunction import (
    TrustRadiusError,
    WaveFunction,
    evaluate_psi,
    extract_wavefunction,
    schrodinger_residual,
    verify_by_shooting,
)
from .asymptotics import (
    GrowthAnalysis,
    extract_g_sequence,
    fit_growth_rate,
    verify_convergence_radius,
)
