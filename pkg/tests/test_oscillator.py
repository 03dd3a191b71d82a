import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilldet import OscillatorParams, Regime, classify_dominance, recurrence_coeffs

finite = st.floats(-50, 50, allow_nan=False)
positive = st.floats(1e-3, 50)


def test_params_validation():
    with pytest.raises(ValueError):
        OscillatorParams(s=0.0)
    with pytest.raises(ValueError):
        OscillatorParams(s=-1.0)
    with pytest.raises(ValueError):
        OscillatorParams(beta=math.inf)
    with pytest.raises(ValueError):
        OscillatorParams(c=math.nan)
    with pytest.raises(TypeError):
        OscillatorParams(delta=1j)


def test_recurrence_examples():
    p = OscillatorParams(beta=1, c=1, delta=1, s=2)
    r = recurrence_coeffs(p, 0.0, 0)
    assert (r.a_n, r.c_n) == (2, 4)
    assert r.theta == 15
    assert recurrence_coeffs(p, 1.691590, 3).c_n == pytest.approx(26.308410, abs=1e-12)
    with pytest.raises(ValueError):
        recurrence_coeffs(p, 0.0, -1)


@given(n=st.integers(0, 10**6), E=finite, s=positive)
def test_recurrence_invariants(n, E, s):
    p = OscillatorParams(s=s)
    r = recurrence_coeffs(p, E, n)
    assert r.a_n == (n + 1) * (n + 2) and r.a_n > 0
    assert isinstance(r.a_n, int)
    # affine in E (slope -1) and in n (slope 4s)
    assert recurrence_coeffs(p, E + 1.0, n).c_n - r.c_n == pytest.approx(-1.0, abs=1e-9 * (1 + abs(r.c_n)))
    assert recurrence_coeffs(p, E, n + 1).c_n - r.c_n == pytest.approx(4 * s, rel=1e-9, abs=1e-9 * abs(r.c_n))


@pytest.mark.parametrize(
    "beta, s, regime, dominant",
    [
        (1.0, 2.0, Regime.ABOVE_THRESHOLD, {2, 5}),
        (1.0, 0.1, Regime.BELOW_THRESHOLD_BETA_POSITIVE, {3, 4}),
        (-1.0, 0.1, Regime.BELOW_THRESHOLD_BETA_NEGATIVE, {1, 6}),
    ],
)
def test_dominance_regimes(beta, s, regime, dominant):
    d = classify_dominance(OscillatorParams(beta=beta, s=s))
    assert d.regime is regime
    assert d.dominant_p == dominant
    assert d.threshold == pytest.approx(0.144338, abs=1e-6)


def test_degenerate_cases():
    d = classify_dominance(OscillatorParams(beta=0.0, s=2.0))
    assert d.regime is Regime.DEGENERATE and len(d.dominant_p) > 2
    at = classify_dominance(OscillatorParams(beta=1.0, s=1.0 / (4 * math.sqrt(3))))
    assert at.regime is Regime.DEGENERATE
    assert at.dominant_p == {2, 3, 4, 5}
    assert not at.two_term


@given(beta=finite, s=positive)
def test_re_gamma_closed_forms(beta, s):
    g = classify_dominance(OscillatorParams(beta=beta, s=s)).re_gamma
    r3 = math.sqrt(3) / 8
    assert g[1] == g[4] == s
    for p, expected in ((0, -r3 * beta - s / 2), (5, -r3 * beta - s / 2), (2, r3 * beta - s / 2), (3, r3 * beta - s / 2)):
        assert g[p] == pytest.approx(expected, abs=1e-12 * (1 + abs(beta) + s))


@given(beta=finite.filter(lambda b: abs(b) > 1e-6), s=positive)
def test_dominance_beta_mirror(beta, s):
    swap = {1: 3, 6: 4, 3: 1, 4: 6, 2: 2, 5: 5}
    a = classify_dominance(OscillatorParams(beta=beta, s=s))
    b = classify_dominance(OscillatorParams(beta=-beta, s=s))
    assert {swap[p] for p in a.dominant_p} == set(b.dominant_p)
    assert a.threshold == b.threshold
