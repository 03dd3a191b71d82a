import numpy as np
import pytest

from hilldet import OscillatorParams, compute_spectrum, convergence_sweep
from hilldet.oracles import quartic_fd_levels
from hilldet.spectrum import sort_levels

REFERENCE_LEVELS = {
    15: [1.69347, 5.106, 9.152, 13.043, 17.82],
    35: [1.691590, 5.12358, 9.2615, 13.879, 18.88],
}


def test_sort_levels():
    z = sort_levels([3, 1 + 1j, 1 - 1j, -2])
    assert list(z) == [-2, 1 - 1j, 1 + 1j, 3]


def test_reference_row_35(params):
    sp = compute_spectrum(params, 35, 5)
    np.testing.assert_allclose(sp.energies, REFERENCE_LEVELS[35], atol=5e-3)
    assert sp.energies[0] == pytest.approx(1.691590, abs=5e-7)
    assert sp.all_real


def test_reference_row_15_two_levels(params):
    sp = compute_spectrum(params, 15, 2)
    assert sp.energies[0] == pytest.approx(1.69347, abs=5e-6)
    assert sp.energies[1] == pytest.approx(5.106, abs=5e-4)


def test_hermitian_limit():
    hd = compute_spectrum(OscillatorParams(beta=0.0, c=0.0, delta=0.0, s=2.0), 60, 1).levels[0]
    assert abs(hd - quartic_fd_levels(1)[0]) <= 1e-5


def test_bad_k(params):
    with pytest.raises(ValueError):
        compute_spectrum(params, 5, 6)


def test_complex_pairs_are_kept():
    # large truncations produce spurious complex pairs; they must be flagged, not dropped
    sp = compute_spectrum(OscillatorParams(beta=1, c=1, delta=1, s=2), 100, 6)
    assert len(sp.levels) == 6
    flags = sp.reality_flags
    assert not flags.all()
    bad = sp.levels[~flags]
    assert np.all(np.abs(bad.imag) > 1e-8 * (1 + np.abs(bad.real)))


def test_sweep_singleton(params):
    rep = convergence_sweep(params, [20], 3)
    assert rep.deltas.shape == (0, 3)
    assert list(rep.converged_digits) == [0, 0, 0]


def test_sweep_rules(params):
    with pytest.raises(ValueError):
        convergence_sweep(params, [20, 15], 3)
    with pytest.raises(ValueError):
        convergence_sweep(params, [4, 10], 5)


def test_sweep_digits_and_refinement(params):
    rep = convergence_sweep(params, (15, 20, 25, 30, 35), 5)
    assert np.all(rep.deltas >= 0)
    assert rep.deltas[-1, 0] < 1e-5
    e = rep.energies[-1]
    expected = [min(15, max(0, int(np.floor(-np.log10(d / (1 + abs(x))))))) for d, x in zip(rep.deltas[-1], e)]
    assert list(rep.converged_digits) == expected
    assert rep.converged_digits[0] >= 6


def test_sweep_parallel_matches_serial(params):
    a = convergence_sweep(params, (15, 20, 25, 30, 35), 5)
    b = convergence_sweep(params, (15, 20, 25, 30, 35), 5, max_workers=4)
    np.testing.assert_array_equal(a.energies, b.energies)


def test_no_level_crossings_beyond_25(params):
    rep = convergence_sweep(params, range(25, 41), 5)
    assert np.all(np.diff(rep.energies, axis=1) > 0)
    # the same level stays closest to its predecessor
    for prev, cur in zip(rep.energies, rep.energies[1:]):
        for i, e in enumerate(cur):
            assert np.argmin(np.abs(prev - e)) == i


@pytest.mark.parametrize("n", [15, 35])
def test_real_spectrum_and_trace(params, n):
    sp = compute_spectrum(params, n, n)
    assert sp.levels.sum().real == pytest.approx(2 * 2 * n**2, rel=1e-8)
    assert np.all(sp.reality_flags[:5])
