"""
Disk diagrams and minimal spanning disks
========================================

Disks are triangulated 2-disks with a boundary loop. The combinatorial
curvature identity holds for all of them; nonpositively curved disks put
all their positive curvature on the boundary.
"""

# %%
from collections import Counter

from npcaudit.disks import (
    boundary_curvature,
    enumerate_disk_types,
    find_minimal_spanning_disks,
    gauss_bonnet_total,
    is_cat0_disk,
    validate_disk,
)
from npcaudit.generators import counterexample, counterexample_loop, octahedron, random_disk

# %%
D = validate_disk([[5, i, (i + 1) % 5] for i in range(5)])
print(D)
print("curvature total", gauss_bonnet_total(D), "boundary part", boundary_curvature(D), "cat0", is_cat0_disk(D))

# %% [markdown]
# Rooted disk types by boundary length and interior count.

# %%
for b in range(3, 8):
    counts = Counter(len(T.interior_vertices) for T in enumerate_disk_types(b, 2))
    print(b, [counts[i] for i in range(3)])

# %%
totals = {gauss_bonnet_total(validate_disk(*random_disk(40, s))) for s in range(200)}
print("curvature totals over 200 random disks:", totals)

# %% [markdown]
# Minimal disks spanning the pentagon of the counterexample: one wheel per
# vertex of the central simplex, each with a degree-5 centre.

# %%
for n in (4, 5):
    res = find_minimal_spanning_disks(counterexample(n), counterexample_loop(n))
    centres = [m(is_cat0_disk(T)[1]) for T, m in res.solutions]
    print(n, "area", res.area, "disks", len(res.solutions), "centres", centres)

# %%
res = find_minimal_spanning_disks(octahedron(), (0, 2, 1, 3))
print("octahedron square: area", res.area, "solutions", len(res.solutions))
