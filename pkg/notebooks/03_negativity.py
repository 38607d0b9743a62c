"""
Negativity and the two closed-form series
=========================================
"""

# %%
from alphavac import (
    ModeSpec,
    NegativityVariant,
    effective_parameters,
    joint_density_matrix,
    negativity_closed,
    negativity_spectral,
    truncation_level,
)

# %% Spectral value against the T-only series and the literal series
print(f"{'alpha':>6} {'q':>4} {'T':>8} {'spectral':>12} {'variant B':>12} {'as printed':>12}")
for alpha in (float("-inf"), -5.0, -1.0, -0.5):
    for q in (0.2, 0.5, 0.8):
        p = effective_parameters(ModeSpec.from_q(alpha, q))
        rho = joint_density_matrix(p.T, truncation_level(p.T).n_max)
        spectral = negativity_spectral(rho)
        b = negativity_closed(p.T)
        printed = negativity_closed(p.T, NegativityVariant.AS_PRINTED, q=p.q)
        print(f"{alpha:>6} {q:>4} {p.T:8.5f} {spectral:12.9f} {b:12.9f} {printed:12.9f}")

# %% Near alpha = 0 the negativity disappears for any curvature
# (the series itself hits its term cap here and says so with a TruncationWarning)
for q in (0.3, 0.5, 0.7):
    T = effective_parameters(ModeSpec.from_q(-1e-6, q)).T
    print(f"alpha=-1e-6 q={q}: T={T:.9f} negativity (series) {negativity_closed(T):.2e}")
