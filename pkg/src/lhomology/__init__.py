"""Bigraded L-homology of finite simplicial complexes."""

__version__ = "0.1.0"

from .algebra import GF, QQ, ZZ, Coefficients, FGModule, Matrix, smith_normal_form
from .bigraded import BigradedGroups
from .complex import (Complex, ComplexError, build_complex, cartesian_product, cone,
                      disjoint_union, join, link, standard_complex, stellar_subdivision, wedge)
from .double import DoubleComplex, total_homology
from .lhom import (e1_page, essential_dimension, l_homology, predict_combination,
                   predict_example7, predict_theorem6, r_homology, reduced_unreduced_check,
                   spectral_page)
from .oracle import e1_direct, e2_direct, fuzz_invariance
from .scx import emit_scx, parse_scx

__all__ = [
    "GF", "QQ", "ZZ", "Coefficients", "FGModule", "Matrix", "smith_normal_form",
    "BigradedGroups", "Complex", "ComplexError", "build_complex", "cartesian_product",
    "cone", "disjoint_union", "join", "link", "standard_complex", "stellar_subdivision",
    "wedge", "DoubleComplex", "total_homology", "e1_page", "essential_dimension",
    "l_homology", "predict_combination", "predict_example7", "predict_theorem6",
    "r_homology", "reduced_unreduced_check", "spectral_page", "e1_direct", "e2_direct",
    "fuzz_invariance", "emit_scx", "parse_scx",
]
