"""
Square wave: fractional convergence
===================================

The indicator of [-0.5, 0.5] after t = 20.  The curvature bound is zero for
piecewise constant data, so alpha is supplied by hand.  Large alpha lets
the unlimited reconstruction act near the jumps; small alpha keeps it away.
Takes a few minutes.
"""

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from thirdlim import harness
from thirdlim.harness import RunConfig

cells = (40, 80, 160, 320, 640)
base = RunConfig(problem="square", cells=cells, t_end=20.0, nu=0.8)

#%%
# Solutions on the plotted grid.

fig, (left, right) = plt.subplots(1, 2, figsize=(11, 4))
for alpha in (0.1, 10.0, 1e3):
    result = harness.solve(RunConfig(**{**base.__dict__, "alpha_override": alpha}), 160)
    left.plot(result.numeric.grid.centers, result.numeric.values, label=f"alpha = {alpha:g}")
left.plot(result.exact.grid.centers, result.exact.values, "k", lw=0.8, label="exact")
left.legend()

#%%
# Orders approach 3/4 from either side.

for rep in harness.run_alpha_sweep(base, [0.1, 10.0]):
    print(f"alpha={rep.alpha_used:<6g}", " ".join(f"{o:5.2f}" for o in rep.orders))
    right.loglog(cells, rep.errors, "o-", label=f"alpha = {rep.alpha_used:g}")
right.loglog(cells, [2.0 * n ** -0.75 for n in cells], "k:", label="slope 3/4")
right.legend()
fig.savefig("square_wave.png", dpi=120)
