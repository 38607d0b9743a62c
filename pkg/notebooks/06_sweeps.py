"""
Figure datasets from a sweep
============================

The same thing the ``alphavac figure`` / ``alphavac sweep`` commands do.
"""

# %%
import io

from alphavac.sweep import FigureTag, config_from_dict, preset, run_sweep, to_csv

# %% A small custom grid: negativity and mutual information vs q for two vacua
config = config_from_dict({
    "alpha_values": ["-inf", -1],
    "q_values": [0.1, 0.4, 0.7],
    "figures": ["FIG2", "FIG4"],
    "theta_points": 16,
    "phi_points": 2,
})
fig2, fig4 = run_sweep(config, threads=2)
print(fig2.metadata)
for row in fig2.rows:
    print(row["alpha"], row["q"], round(row["T"], 6), round(row["negativity_spectral"], 6),
          round(row["mutual_info_I"], 6))

# %% Discord curves from the FIG6 preset (coarser minimizer grid to keep it quick)
ds = run_sweep(preset(FigureTag.FIG6_DISCORD_CURVES, theta_points=16, phi_points=2))[0]
for alpha in sorted({r["alpha"] for r in ds.rows}):
    curve = [r["discord"] for r in ds.rows if r["alpha"] == alpha]
    print(f"alpha={alpha:>6}: " + " ".join(f"{d:.4f}" for d in curve))

# %% The CSV form
print(io.StringIO(to_csv(ds)).readline().strip())
