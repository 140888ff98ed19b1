"""
Limiter functions over the slope ratio
======================================

Tabulate the ratio-form limiters on theta in [-2, 4] and overlay them.
The piecewise-linear ``phi_limo3`` tracks the logarithmic limiter at
q = 1.4; ``phi_new`` differs only in the left branch and the cap.
"""

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from thirdlim import harness

#%%
# The same table the ``limiter-table`` subcommand writes.

text = harness.emit_limiter_table(theta_range=(-2.0, 4.0, 601), q=1.4)
table = np.genfromtxt(io.StringIO(text), delimiter=",", names=True)
print(text.splitlines()[0])
print(len(table), "rows")

#%%
# Overlay.

fig, ax = plt.subplots(figsize=(6, 4))
for name in ("phi_o3", "phi_as", "phi_limo3", "phi_new"):
    ax.plot(table["theta"], table[name], label=name)
ax.axhline(0, color="k", lw=0.5)
ax.set_xlabel(r"$\theta$")
ax.set_ylabel(r"$\phi(\theta)$")
ax.set_ylim(-0.2, 2.1)
ax.legend()
fig.savefig("limiter_functions.png", dpi=120)
