"""
Torsion in the projective plane
===============================

The six-vertex real projective plane has 2-torsion in its homology.  Over
Z and Q the reduced L-homology is a single class at (2, 2), but over F2
extra classes appear.
"""

import os

from lhomology import GF, QQ, ZZ, l_homology
from lhomology.scx import read_scx

here = os.path.dirname(os.path.abspath(__file__))
K = read_scx(os.path.join(here, "data", "rp2.scx"))
print("f-vector", K.f_vector())

# %%
for coeff in (ZZ, QQ, GF(2)):
    print(f"reduced over {coeff}:")
    print(l_homology(K, coeff).format_table())

# %%
# The unreduced groups carry the torsion directly.
print(l_homology(K, ZZ, reduced=False).format_table())
