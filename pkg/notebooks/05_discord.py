"""
Quantum discord and its measurement direction
=============================================
"""

# %%
import math

import numpy as np

from alphavac import MeasurementDirection, conditional_entropy, discord, joint_density_matrix, truncation_level

# %% Conditional entropy as a function of the measurement polar angle
T = 0.6
rho = joint_density_matrix(T, truncation_level(T).n_max)
for theta in np.linspace(0, math.pi, 9):
    print(f"theta={theta:.3f}  S_cond={conditional_entropy(rho, MeasurementDirection(theta)):.8f}")

# the azimuth does not matter for this family of states
print([round(conditional_entropy(rho, MeasurementDirection(1.0, phi)), 12) for phi in (0, 1, 2, 3)])

# %% Discord with the minimizing direction
for T in (0.0, 0.3, 0.6, 0.9, 0.99):
    D, direction = discord(T)
    print(f"T={T:<5} D={D:.8f}  theta={direction.theta:.6f}  phi={direction.phi:.3f}")
