"""
Growth law of the Taylor coefficients
=====================================

Away from an eigenvalue the coefficients grow like exp(gamma n^(2/3)).
Above the threshold s > |beta|/(4 sqrt 3) the rate is gamma = s; below it
the rate changes branch and falls with s.
"""

# %%
import math

import numpy as np

from hilldet import (
    OscillatorParams,
    classify_dominance,
    extract_g_sequence,
    fit_growth_rate,
    generate_coefficients,
)


def fitted(s, energy=3.0):
    p = OscillatorParams(beta=1.0, c=1.0, delta=1.0, s=s)
    y = extract_g_sequence(generate_coefficients(p, energy, 1.0, 0.0, 4000))
    return fit_growth_rate(y, (1000, 4000), p)


# %%
# Scaled doubles keep 4000 terms representable even though |h_n| spans
# thousands of decades.
for s in (2.0, 0.5, 0.05):
    g = fitted(s)
    regime = classify_dominance(OscillatorParams(beta=1.0, c=1.0, delta=1.0, s=s)).regime
    print(f"s = {s:5}: {regime.value:>30}, fitted {g.fitted_gamma:.4f}, predicted {g.predicted_gamma:.4f}")

# %%
# Crossing the threshold.
threshold = 1 / (4 * math.sqrt(3))
grid = np.linspace(0.02, 0.6, 25)
rates = np.array([fitted(s).fitted_gamma for s in grid])
theory = np.array([fitted(s).predicted_gamma for s in grid])

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    ax.plot(grid, rates, "o", label="fitted")
    ax.plot(grid, theory, "-", label="growth law")
    ax.axvline(threshold, color="grey", ls=":")
    ax.set_xlabel("s")
    ax.set_ylabel("gamma")
    ax.legend()
    fig.savefig("growth.png", dpi=120)
