import math

import numpy as np
import pytest

from hilldet import (
    OscillatorParams,
    TrustRadiusError,
    compute_spectrum,
    evaluate_psi,
    extract_wavefunction,
    schrodinger_residual,
    verify_by_shooting,
)
from hilldet.oracles import quartic_fd_levels
from hilldet.wavefunction import ShootingError


def test_ground_state_extraction(ground35):
    assert ground35.energy == pytest.approx(1.691590, abs=5e-7)
    assert 0 <= ground35.zeta < 2 * math.pi
    h = ground35.coefficients
    assert h[0] ** 2 + h[1] ** 2 == pytest.approx(1.0, abs=1e-15)
    assert h[0] >= 0
    assert ground35.zeta == pytest.approx(math.atan2(h[1], h[0]) % (2 * math.pi))


def test_energy_matches_spectrum_exactly(params):
    for level in range(3):
        wf = extract_wavefunction(params, 35, level)
        assert wf.energy == compute_spectrum(params, 35, 5).energies[level]


def test_eigenvector_satisfies_truncated_recurrence(params, ground35):
    from hilldet import assemble

    a = assemble(params, 35).entries
    h = ground35.coefficients
    assert np.linalg.norm(a @ h - ground35.energy * h) <= 1e-8 * np.linalg.norm(a, 2) * np.linalg.norm(h)


def test_refuses_complex_level():
    with pytest.raises(ValueError):
        extract_wavefunction(OscillatorParams(beta=1, c=1, delta=1, s=2), 100, 0)


def test_refuses_bad_level(params):
    with pytest.raises(ValueError):
        extract_wavefunction(params, 10, 10)


def test_truncations_agree(params, ground35):
    b = extract_wavefunction(params, 45, 0).coefficients[:20]
    a = ground35.coefficients[:20]
    assert np.max(np.abs(a - b)) <= 1e-6 * np.max(np.abs(b))


def test_psi_at_origin(ground35):
    val = evaluate_psi(ground35, 0.0)
    assert val.imag == 0.0
    assert val.real == pytest.approx(math.cos(ground35.zeta), abs=1e-15)


def test_pt_identity(ground35):
    plus, minus = ground35(1.3), ground35(-1.3)
    assert abs(minus - np.conj(plus)) <= 1e-12 * abs(plus)


def test_trust_radius_refusal(ground35):
    assert 1.0 < ground35.trust_radius < 2.0
    with pytest.raises(TrustRadiusError) as info:
        ground35(2.0)
    assert info.value.tail > 1e-9


def test_refinement_inside_trust_region(params, ground35, ground60):
    x = 1.0
    assert abs(ground35(x) - ground60(x)) <= 1e-6 * abs(ground60(x))
    wf90 = extract_wavefunction(params, 90, 0)
    assert abs(ground60(2.0) - wf90(2.0)) <= 1e-6 * abs(wf90(2.0))


def test_complex_argument(ground60):
    z = 0.6 + 0.4j
    n = np.arange(ground60.n)
    ref = np.exp(-2.0 * z * z) * np.sum(ground60.coefficients * (1j * z) ** n)
    assert abs(ground60(z) - ref) <= 1e-12 * abs(ref)


def test_log_psi_finite_on_trust_interval(ground60):
    xs = np.linspace(-ground60.trust_radius, ground60.trust_radius, 101) * 0.999
    vals = ground60(xs)
    assert np.all(np.isfinite(np.log(np.abs(vals))))
    # Gaussian dominance with a fitted constant: |psi(x)| <= |psi(0)| exp(k x^2)
    ratio = np.log(np.abs(vals) / abs(vals[50]))
    k = np.max(ratio[xs != 0] / xs[xs != 0] ** 2)
    assert np.isfinite(k)


def test_schrodinger_residual(ground60):
    r = ground60.trust_radius
    xs = np.linspace(-0.95 * r, 0.95 * r, 41)
    assert schrodinger_residual(ground60, xs).max() <= 1e-4


def test_shooting_from_table_guess(params, ground35):
    E, zeta = verify_by_shooting(params, 1.7, ground35.zeta, 4.0, 400)
    assert abs(E - 1.691590) <= 1e-3
    assert abs(E - ground35.energy) <= 1e-6


def test_shooting_fixed_point(params, ground60):
    E, zeta, info = verify_by_shooting(
        params, ground60.energy, ground60.zeta, 4.0, 400, full_output=True
    )
    assert info["iterations"] <= 2
    assert E == pytest.approx(ground60.energy, abs=1e-8)
    assert zeta == pytest.approx(ground60.zeta, abs=1e-6)


def test_shooting_hermitian_limit():
    p = OscillatorParams(beta=0.0, c=0.0, delta=0.0, s=2.0)
    hd = compute_spectrum(p, 60, 1).energies[0]
    E, _ = verify_by_shooting(p, 1.05, 0.0, 4.0, 400)
    assert abs(E - hd) <= 1e-4
    assert abs(E - quartic_fd_levels(1)[0]) <= 1e-4


def test_shooting_rejects_short_series(params):
    with pytest.raises(ValueError):
        verify_by_shooting(params, 1.7, 0.0, 4.0, 40)


def test_shooting_reports_nonconvergence(params, ground35):
    with pytest.raises(ShootingError):
        verify_by_shooting(params, 1.7, ground35.zeta, 4.0, 400, max_iter=1)
