"""
Independent check by shooting
=============================

Newton iteration on (E, zeta) that drives psi(X) to zero at X = 4,
using the Taylor series alone and no matrix.  It lands on the same
ground-state energy as the truncated eigenproblem.
"""

# %%
from hilldet import REFERENCE_PARAMS, OscillatorParams, compute_spectrum, extract_wavefunction, verify_by_shooting
from hilldet.oracles import quartic_fd_levels

wf = extract_wavefunction(REFERENCE_PARAMS, 35, 0)
E, zeta, info = verify_by_shooting(REFERENCE_PARAMS, 1.7, wf.zeta, 4.0, 400, full_output=True)
print(f"eigenproblem {wf.energy:.10f}, shooting {E:.10f} after {info['iterations']} steps")

# %%
# The Hermitian limit has a third, real-line reference: finite differences.
herm = OscillatorParams(beta=0.0, c=0.0, delta=0.0, s=2.0)
print("finite difference", quartic_fd_levels(1)[0])
print("eigenproblem     ", compute_spectrum(herm, 60, 1).energies[0])
print("shooting         ", verify_by_shooting(herm, 1.05, 0.0, 4.0, 400)[0])
