"""
Disks of different dimension
============================

Every disk is contractible, so ordinary reduced homology cannot tell them
apart.  Reduced L-homology sees the dimension: the full n-simplex has a
single class sitting at bidegree (n, n).
"""

from lhomology import ZZ, l_homology, standard_complex
from lhomology.chains import homology

# %%
# Ordinary reduced homology of the full simplices: all zero.
for n in range(5):
    D = standard_complex("full", n)
    H = homology(D, ZZ, reduced=True)
    print(n, "reduced homology zero:", all(g.is_zero() for g in H.values()))

# %%
# L-homology puts one copy of Z at (n, n).
for n in range(5):
    D = standard_complex("full", n)
    print(n, l_homology(D, ZZ).format_table())

# %%
# Boundaries of simplices (spheres) land one step lower, at (n-1, n-1).
for n in range(1, 5):
    print(n, l_homology(standard_complex("boundary", n), ZZ).format_table())
