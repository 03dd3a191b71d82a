"""
Convergence of the truncated spectrum
=====================================

The five lowest levels of the PT-symmetric quartic oscillator at
beta = c = delta = 1 with Gaussian scale s = 2, as the truncation order N
grows.  The ground state settles to seven digits by N = 30.
"""

# %%
# A sweep over truncation orders.  Each N is an independent eigenproblem.
import numpy as np

from hilldet import REFERENCE_PARAMS, convergence_sweep

report = convergence_sweep(REFERENCE_PARAMS, [15, 20, 25, 30, 35], 5)
print("  N " + "".join(f"{'E_' + str(i):>12}" for i in range(5)))
for n, row in zip(report.n_values, report.energies):
    print(f"{n:3d} " + "".join(f"{e:12.6f}" for e in row))

# %%
# How many digits are stable between the last two orders?
print("stable digits per level:", [int(d) for d in report.converged_digits])

# %%
# The lowest level converges far faster than the fourth excited one.
# Extending the sweep shows the ground state reaching its plateau.
wide = convergence_sweep(REFERENCE_PARAMS, range(10, 61, 2), 5)
drift = np.abs(wide.energies - wide.energies[-1])

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for k in range(5):
        ax.semilogy(wide.n_values[:-1], drift[:-1, k], marker=".", label=f"E_{k}")
    ax.set_xlabel("truncation order N")
    ax.set_ylabel("|E(N) - E(60)|")
    ax.legend()
    fig.savefig("convergence.png", dpi=120)
