import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilldet.scaled import ScaledReal

reals = st.floats(-1e300, 1e300, allow_nan=False, allow_infinity=False)
nonzero = reals.filter(lambda v: abs(v) > 1e-300)


@given(reals)
def test_roundtrip(x):
    s = ScaledReal.from_float(x)
    assert float(s) == x
    assert s.mantissa == 0.0 or 1.0 <= abs(s.mantissa) < 2.0


@given(nonzero)
def test_log_abs(x):
    s = ScaledReal.from_float(x)
    assert s.log_abs() == pytest.approx(math.log(abs(x)), rel=1e-13, abs=1e-13)


@given(nonzero, nonzero)
def test_mul_div(x, y):
    a, b = ScaledReal.from_float(x), ScaledReal.from_float(y)
    assert (a * b).log_abs() == pytest.approx(math.log(abs(x)) + math.log(abs(y)), abs=1e-12)
    assert (a / b).log_abs() == pytest.approx(math.log(abs(x)) - math.log(abs(y)), abs=1e-12)
    assert (a * b).sign == math.copysign(1, x) * math.copysign(1, y)


@given(st.floats(-1e150, 1e150, allow_nan=False), st.floats(-1e150, 1e150, allow_nan=False))
def test_add_matches_float(x, y):
    assert float(ScaledReal.from_float(x) + ScaledReal.from_float(y)) == pytest.approx(x + y, rel=1e-15, abs=0)


def test_far_below_double_range():
    tiny = ScaledReal.from_log(-5000.0)
    assert float(tiny) == 0.0
    assert tiny.log_abs() == pytest.approx(-5000.0, rel=1e-13)
    assert (tiny * tiny).log_abs() == pytest.approx(-10000.0, rel=1e-13)
    assert (tiny + ScaledReal.from_float(1.0)) == ScaledReal.from_float(1.0)


def test_zero_and_validation():
    z = ScaledReal(0.0, 17)
    assert z.exponent == 0 and z.is_zero() and z.log_abs() == -math.inf
    with pytest.raises(ValueError):
        ScaledReal(0.5, 0)
    with pytest.raises(ZeroDivisionError):
        ScaledReal.from_float(1.0) / ScaledReal(0.0)
