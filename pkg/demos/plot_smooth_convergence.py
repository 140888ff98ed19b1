"""
Smooth data: sensitivity to the curvature bound
===============================================

Advect sin(pi x) ten times around [-1, 1] (t = 20, nu = 0.8) and
compare L1 errors for a correct, an overestimated and two underestimated
values of alpha, plus the unlimited second-order baseline.  Takes about a
minute.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from thirdlim import harness
from thirdlim.harness import RunConfig

cells = (40, 80, 160, 320, 640)
base = RunConfig(problem="sine", cells=cells, t_end=20.0, nu=0.8)
alphas = [100 * math.pi ** 2, math.pi ** 2, 0.1 * math.pi ** 2, 1e-3 * math.pi ** 2]

#%%
# One convergence report per alpha.

reports = harness.run_alpha_sweep(base, alphas)
central = harness.run_convergence(RunConfig(**{**base.__dict__, "limiter": "central2"}), write=False)

for rep in reports + [central]:
    print(f"{rep.limiter:45s}", " ".join(f"{o:5.2f}" for o in rep.orders))

#%%
# Double-logarithmic error plot.

fig, ax = plt.subplots(figsize=(6, 4))
for rep in reports:
    ax.loglog(cells, rep.errors, "o-", label=f"alpha = {rep.alpha_used:.3g}")
ax.loglog(cells, central.errors, "k--", label="central, 2nd order")
ax.loglog(cells, [2e2 * n ** -3.0 for n in cells], "k:", label="slope 3")
ax.set_xlabel("cells")
ax.set_ylabel("L1 error")
ax.legend()
fig.savefig("smooth_convergence.png", dpi=120)
