"""
Where the switch selects the full third-order slope
===================================================

Evaluate eta on the projected sine wave.  Cells next to the extrema at
x = +-0.5 fall below one and keep the unlimited reconstruction even though
one lateral difference nearly vanishes there.
"""


import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from thirdlim import SwitchConfig, eta, sine_problem
from thirdlim.reconstruction import slopes

problem = sine_problem()
cfg = SwitchConfig(alpha=problem.alpha_analytic)

#%%
# eta stays O(1) at the extrema and grows like 1/dx elsewhere.

fig, ax = plt.subplots(figsize=(6, 4))
for n in (40, 160):
    grid = problem.grid(n)
    e = eta(slopes(problem.initial(grid).values), cfg, grid.dx)
    ax.semilogy(grid.centers, e, ".", label=f"n={n}")
    print(n, "cells with eta < 1:", np.round(grid.centers[e < 1], 4))
ax.axhline(1.0, color="k", lw=0.8)
ax.set_xlabel("x")
ax.set_ylabel(r"$\eta$")
ax.legend()
fig.savefig("switch_function.png", dpi=120)

#%%
# The L1 variant uses c = 2 instead of sqrt(5/2).

grid = problem.grid(160)
s = slopes(problem.initial(grid).values)
l1 = eta(s, SwitchConfig(problem.alpha_analytic, norm="l1"), grid.dx)
print("cells flagged smooth, L2 vs L1:", int(np.sum(eta(s, cfg, grid.dx) < 1)), int(np.sum(l1 < 1)))
