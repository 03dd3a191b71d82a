"""
Closed-form coefficients from determinants
==========================================

With h_0 = 1, h_1 = 0 (sigma) or h_0 = 0, h_1 = 1 (omega), every later
coefficient is a ratio of a banded determinant to factorials.  In exact
rational arithmetic the two routes agree exactly.
"""

# %%
from fractions import Fraction

from hilldet import OscillatorParams
from hilldet.series import exact_coefficients, omega_via_determinant, sigma_via_determinant

p = OscillatorParams(beta=Fraction(1, 3), c=1, delta=1, s=Fraction(7, 3))
E = Fraction(1, 2)

sigma = exact_coefficients(p, E, 1, 0, 10)
omega = exact_coefficients(p, E, 0, 1, 10)

# %%
for m in range(9):
    s_det = sigma_via_determinant(p, E, m)
    o_det = omega_via_determinant(p, E, m)
    print(f"n = {m + 2:2d}  sigma = {s_det.sigma_or_omega}  "
          f"match {s_det.sigma_or_omega == sigma[m + 2]}, omega match {o_det.sigma_or_omega == omega[m + 2]}")
