"""
Empty polygons, largeness and SNPC
==================================

Short loops (length 3, 4, 5) are classified by trying every diagonal
triangulation of the polygon: a loop is empty when none of them is present.
"""

# %%
from npcaudit.generators import counterexample, cycle, octahedron, random_flag_complex
from npcaudit.polygons import find_empty_ngons, is_k_large, is_snpc, polygon_triangulations

# %%
for n in (3, 4, 5):
    print(n, "corners ->", len(polygon_triangulations(n)), "triangulations")

# %% [markdown]
# The octahedron's equatorial squares are empty, so it is 4-large but not 5-large.

# %%
O = octahedron()
for w in find_empty_ngons(O, 6)[:3]:
    print(w.to_dict())
print("4-large:", bool(is_k_large(O, 4)), " 5-large:", bool(is_k_large(O, 5)))

# %% [markdown]
# A 5-cycle is an empty pentagon; a 6-cycle is 6-large.

# %%
print("C5 SNPC:", bool(is_snpc(cycle(5))), " C6 SNPC:", bool(is_snpc(cycle(6))))

# %% [markdown]
# In the counterexample complex the link of the central simplex is a 5-cycle,
# so the SNPC audit fails there.

# %%
res = is_snpc(counterexample(4))
s, lres = res.witness
print("failing simplex", s, "link witness", lres.witness_dict())

# %% [markdown]
# A seeded random flag complex, audited.

# %%
K = random_flag_complex(9, 0.4, seed=7)
print(len(K.facets), "facets;", "6-large:", bool(is_k_large(K, 6)), " SNPC:", bool(is_snpc(K)))
