"""
Metric links of codimension-2 faces
===================================

Every edge of the link of a codimension-2 face carries the dihedral angle
arccos(1/m) of the regular m-simplex it came from. A short loop is a cycle
of total length below 2*pi.
"""

# %%
import numpy as np

from npcaudit.generators import counterexample, counterexample_sigma, tetra_fan
from npcaudit.metric import TWO_PI, dihedral_angle, edge_link_passes, girth_threshold

# %%
ms = np.arange(2, 9)
angles = np.array([dihedral_angle(int(m)) for m in ms])
print(np.column_stack([ms, np.degrees(angles).round(3)]))
print("cycle length needed:", [girth_threshold(int(m)) for m in ms])

# %% [markdown]
# Tetrahedra around an edge: three are too few, six are enough.

# %%
for k in (3, 4, 5, 6, 7):
    r = edge_link_passes(tetra_fan(k), (0, 1))
    print(k, round(r.girth.length, 6), "pass" if r else "fail")

# %% [markdown]
# The counterexample family: the central link is a pentagon with edges
# arccos(1/n), which clears 2*pi from n = 4 on.

# %%
for n in range(3, 9):
    r = edge_link_passes(counterexample(n), counterexample_sigma(n))
    print(n, f"{r.girth.length:.6f}", f"{r.girth.length - TWO_PI:+.6f}")
