"""
Complexes, links and full subcomplexes
======================================

A complex is stored as its set of facets. Everything else (faces, links,
induced subcomplexes, the 1-skeleton) is derived on demand.
"""

# %%
from npcaudit.complex import combinatorial_link, from_facets, induced_subcomplex, is_flag, is_full_in, join
from npcaudit.generators import cycle, octahedron

# %% [markdown]
# Non-maximal faces are absorbed on construction.

# %%
K = from_facets([[0, 1], [1, 2], [0, 1, 2], [2, 3]])
print(K.sorted_facets())
print("dimension", K.dimension, "vertices", sorted(K.vertices))

# %% [markdown]
# The link of a vertex in the octahedron is a square; the link of the
# empty simplex is the whole complex.

# %%
O = octahedron()
print("lk(0) =", combinatorial_link(O, (0,)).sorted_facets())
print("lk(()) == O:", combinatorial_link(O, ()) == O)

# %% [markdown]
# Induced subcomplexes are full; a hollow triangle inside a solid one is not.

# %%
solid = from_facets([[0, 1, 2]])
hollow = cycle(3)
print(is_full_in(hollow, solid))
print(is_full_in(induced_subcomplex(O, {0, 1, 2, 3}), O))

# %% [markdown]
# Flagness, and a join: a point joined with a 5-cycle is a wheel.

# %%
print("octahedron flag:", is_flag(O))
print("hollow triangle flag:", is_flag(hollow))
print(join(from_facets([[5]]), cycle(5)).sorted_facets())
