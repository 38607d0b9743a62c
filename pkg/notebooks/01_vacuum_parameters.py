"""
Effective parameter of an alpha-vacuum mode
===========================================

Every correlation measure depends on a mode only through T = q f, where
q = exp(-pi k / H) and f is the vacuum deformation factor.
"""

# %%
import math

import numpy as np

from alphavac import EUCLIDEAN, ModeSpec, alpha_for_T, effective_parameters, truncation_level

# %% The Euclidean vacuum is alpha = -inf; there f = 1 and T = q.
for H in (0.5, 1.0, 2.0, 10.0):
    p = effective_parameters(ModeSpec(EUCLIDEAN, wavenumber_k=1.0, hubble_H=H))
    print(f"H={H:5.1f}  q={p.q:.6f}  f={p.f:.6f}  T={p.T:.6f}")

# %% Raising alpha towards 0 pushes T towards 1 for every q.
for alpha in (-20, -5, -1, -0.1, -1e-6):
    row = [effective_parameters(ModeSpec.from_q(alpha, q)).T for q in (0.1, 0.5, 0.9)]
    print(f"alpha={alpha:>8}", "  ".join(f"{t:.8f}" for t in row))

# %% Different (q, alpha) pairs can share one T.
for q in (0.0, 0.3, 0.7):
    alpha = alpha_for_T(0.7, q)
    print(f"q={q}  alpha={alpha:.6f}  T={effective_parameters(ModeSpec.from_q(alpha, q)).T!r}")

# %% Fock cutoff needed to leave less than 1e-12 of the probability out.
for T in np.linspace(0.1, 0.99, 6):
    tr = truncation_level(T, tail_tol=1e-12)
    print(f"T={T:.3f}  n_max={tr.n_max:5d}  tail={tr.tail_mass:.2e}")

print("q=0 limit:", effective_parameters(ModeSpec.from_q(-1.0, 0.0)).T, "=", math.exp(-1))
