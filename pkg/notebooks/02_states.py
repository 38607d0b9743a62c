"""
Truncated states and the joint density matrix
=============================================
"""

# %%
import numpy as np

from alphavac import (
    alpha_vacuum_state,
    joint_density_matrix,
    one_particle_state,
    partial_transpose_alice,
    reduce_alice,
    reduce_rob,
)

T = 0.6

# %% Region-I/II amplitudes of the vacuum and one-particle states
vac = alpha_vacuum_state(T, 10)
one = one_particle_state(T, 10)
print("vacuum  :", np.round(vac.amplitudes[:5], 5), "missing norm", vac.tail_mass)
print("1-part. :", np.round(one.amplitudes[:5], 5), "missing norm", one.tail_mass)

# %% The joint state of Alice's qubit and region I, with region II traced out
rho = joint_density_matrix(T, 40)
print("dimension", rho.dim, " trace", rho.trace(), " deficit", rho.trace_deficit)

# the spectrum is one nonzero eigenvalue per 2x2 block {|0,n>, |1,n+1>}
lam = np.sort(np.linalg.eigvalsh(rho.entries))[::-1][:4]
n = np.arange(4)
x = T * T
print("top eigenvalues:", lam)
print("block formula  :", 0.5 * x**n * (1 - x) * (1 + (n + 1) * (1 - x)))

# %% Marginals
print("Alice:\n", reduce_alice(rho).entries)
print("Rob diag:", np.round(np.diag(reduce_rob(rho).entries)[:6], 6))

# %% The partial transpose has negative eigenvalues: the state is entangled
pt = partial_transpose_alice(rho)
print("most negative PT eigenvalue:", np.linalg.eigvalsh(pt.entries).min())
