"""Floating point numbers with an unbounded binary exponent.

Taylor coefficients of the oscillator decay like ``n^(-n/3)`` and leave the
double range near n ~ 400.  A :class:`ScaledReal` keeps a signed mantissa in
``[1, 2)`` next to a Python integer exponent so that products, sums and
logarithms stay meaningful far beyond that point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["ScaledReal", "normalize", "LN2"]

LN2 = math.log(2.0)


def normalize(value: float, exponent: int = 0) -> tuple[float, int]:
    """Split ``value * 2**exponent`` into a mantissa in [1, 2) and an exponent."""
    if value == 0.0:
        return 0.0, 0
    if not math.isfinite(value):
        raise OverflowError(f"cannot scale non-finite value {value!r}")
    m, e = math.frexp(value)
    return 2.0 * m, exponent + e - 1


@dataclass(frozen=True)
class ScaledReal:
    """``mantissa * 2**exponent`` with ``1 <= |mantissa| < 2`` or an exact zero."""

    mantissa: float
    exponent: int = 0

    def __post_init__(self):
        m = self.mantissa
        if m != 0.0 and not 1.0 <= abs(m) < 2.0:
            raise ValueError(f"mantissa {m!r} is not normalized")
        if m == 0.0 and self.exponent != 0:
            object.__setattr__(self, "exponent", 0)

    @classmethod
    def from_float(cls, value: float, exponent: int = 0) -> "ScaledReal":
        return cls(*normalize(float(value), exponent))

    @classmethod
    def from_log(cls, log_abs: float, sign: float = 1.0) -> "ScaledReal":
        """Build from ``ln|x|`` and a sign; useful for values no double can hold."""
        if sign == 0 or log_abs == -math.inf:
            return cls(0.0)
        e = math.floor(log_abs / LN2)
        m = math.exp(log_abs - e * LN2)
        return cls.from_float(math.copysign(m, sign), e)

    @property
    def sign(self) -> int:
        return (self.mantissa > 0) - (self.mantissa < 0)

    def is_zero(self) -> bool:
        return self.mantissa == 0.0

    def log_abs(self) -> float:
        """Natural log of the magnitude (``-inf`` for zero)."""
        if self.mantissa == 0.0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.exponent * LN2

    def __float__(self) -> float:
        # ldexp raises on overflow and flushes to zero on underflow
        return math.ldexp(self.mantissa, self.exponent)

    def __neg__(self) -> "ScaledReal":
        return ScaledReal(-self.mantissa, self.exponent)

    def __abs__(self) -> "ScaledReal":
        return ScaledReal(abs(self.mantissa), self.exponent)

    def _coerce(self, other) -> "ScaledReal":
        if isinstance(other, ScaledReal):
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return ScaledReal.from_float(float(other))
        return NotImplemented

    def __mul__(self, other) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ScaledReal.from_float(self.mantissa * other.mantissa, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.mantissa == 0.0:
            raise ZeroDivisionError("division by a zero ScaledReal")
        return ScaledReal.from_float(self.mantissa / other.mantissa, self.exponent - other.exponent)

    def __add__(self, other) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.mantissa == 0.0:
            return other
        if other.mantissa == 0.0:
            return self
        big, small = (self, other) if self.exponent >= other.exponent else (other, self)
        shift = small.exponent - big.exponent
        # beyond 1100 binary places the smaller term cannot affect a double
        tail = math.ldexp(small.mantissa, shift) if shift > -1100 else 0.0
        return ScaledReal.from_float(big.mantissa + tail, big.exponent)

    __radd__ = __add__

    def __sub__(self, other) -> "ScaledReal":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ScaledReal":
        return (-self) + other

    def __lt__(self, other) -> bool:
        return (self - other).mantissa < 0

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __repr__(self) -> str:
        return f"ScaledReal({self.mantissa!r}, {self.exponent})"
