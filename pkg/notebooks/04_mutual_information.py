"""
Mutual information between Alice and the two static regions
============================================================
"""

# %%
import warnings

from alphavac import (
    TruncationWarning,
    entropies,
    joint_density_matrix,
    mutual_information_closed,
    mutual_information_spectral,
    truncation_level,
)

warnings.simplefilter("ignore", TruncationWarning)

# %% I_I falls from 2 to 1 as T grows, and I_I + I_II stays at 2
for T in (0.0, 0.3, 0.6, 0.9, 0.99, 0.999):
    n_max = truncation_level(T).n_max
    I1, I2 = mutual_information_spectral(T, n_max)
    print(f"T={T:<6} I_I={I1:.8f} I_II={I2:.8f} sum={I1 + I2:.12f} series={mutual_information_closed(T):.8f}")

# %% The entropies behind it
e = entropies(joint_density_matrix(0.8, truncation_level(0.8).n_max))
print(e)
print("I_I =", e.mutual_info_I, " I_II =", e.mutual_info_II)
