"""
Joins, cones and products
=========================

Combining complexes combines their L-homology in a predictable way.  The
predictions from ``predict_combination`` are compared with direct
computation.
"""

from lhomology import (QQ, ZZ, cartesian_product, cone, join, l_homology, predict_combination,
                       standard_complex)
from lhomology.corpus import sphere0

S1 = standard_complex("boundary", 2)

# %%
# Join: S0 * S0 is a square, a circle.
S0 = l_homology(sphere0(), QQ)
print("predicted:", predict_combination("join", S0, S0).format_table())
print("computed: ", l_homology(join(sphere0(), sphere0()), QQ).format_table())

# %%
# Cone shifts everything by (1, 1).
print("cone(S1):", l_homology(cone(S1), ZZ).format_table())

# %%
# The staircase product of two circles is a torus; its unreduced L-homology
# is the tensor square of that of the circle.
T = cartesian_product(S1, S1)
lh = l_homology(S1, QQ, reduced=False)
print("torus f-vector:", T.f_vector())
print(l_homology(T, QQ, reduced=False).format_table())
print("tensor prediction matches:",
      l_homology(T, QQ, reduced=False) == predict_combination("product", lh, lh))
