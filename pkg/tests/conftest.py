import numpy as np
import pytest

from hilldet import REFERENCE_PARAMS, extract_wavefunction

_ACCEPTANCE = []


def record_acceptance(number, name, passed, detail=""):
    _ACCEPTANCE.append((number, name, bool(passed), detail))


@pytest.fixture(scope="session")
def params():
    return REFERENCE_PARAMS


@pytest.fixture(scope="session")
def ground35():
    return extract_wavefunction(REFERENCE_PARAMS, 35, 0)


@pytest.fixture(scope="session")
def ground60():
    return extract_wavefunction(REFERENCE_PARAMS, 60, 0)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(_ACCEPTANCE, key=lambda r: r[0]):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {name}: {detail}")


def charpoly_roots(matrix):
    """Eigenvalues of an integer matrix from its exact characteristic polynomial.

    Coefficients come from exact Faddeev-LeVerrier; the roots are found by
    mpmath at 60 digits, so nothing here touches the QR code path.
    """
    import mpmath

    from hilldet.oracles import faddeev_leverrier

    coeffs = faddeev_leverrier(matrix)
    with mpmath.workdps(60):
        roots = mpmath.polyroots(coeffs, maxsteps=500, extraprec=400)
    return np.array([complex(r) for r in roots])


def match_multisets(a, b):
    """Largest distance after optimally pairing two equal-size multisets."""
    from scipy.optimize import linear_sum_assignment

    a, b = np.asarray(a), np.asarray(b)
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max()) if len(a) else 0.0
