"""Chain groups, the boundary d and the relative coboundary delta.

Bases are the canonical per-dimension simplex lists of the complex; the
reduced (augmented) basis adds the empty simplex ``[ ]`` in dimension -1.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .algebra import Coefficients, Matrix, homology_subquotient, kernel_basis
from .complex import Complex


def permutation_sign(seq: Sequence) -> int:
    """Parity of the permutation sorting ``seq`` (entries distinct)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def normalize(K: Optional[Complex], seq: Sequence[int]):
    """Normal form of the chain simplex ``[v0, ..., vk]``.

    Returns ``(sign, simplex)`` or None when a vertex repeats or (if ``K`` is
    given) the vertex set is not a simplex of K.
    """
    s = tuple(sorted(seq))
    if len(set(s)) != len(s):
        return None
    if K is not None and s not in K:
        return None
    return permutation_sign(seq), s


def basis(K: Complex, k: int, reduced: bool) -> tuple:
    if k == -1:
        return ((),) if reduced else ()
    return K.simplices(k)


def _degrees(K: Complex, reduced: bool) -> range:
    return range(-1 if reduced else 0, K.dim + 1)


def boundary_matrix(K: Complex, k: int, reduced: bool) -> Matrix:
    """Matrix of ``d: C_k -> C_{k-1}``."""
    src = basis(K, k, reduced)
    dst = basis(K, k - 1, reduced)
    cols = []
    for s in src:
        col = {}
        if k > 0 or (k == 0 and reduced):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                col[K.index(face)] = (-1) ** i
        cols.append(col)
    return Matrix(len(dst), len(src), cols)


def coboundary_matrix(K: Complex, k: int, reduced: bool) -> Matrix:
    """Matrix of ``delta: C_k -> C_{k+1}``, ``delta(tau) = sum_v [v, tau]``.

    Summands whose vertex set is not a simplex vanish.
    """
    src = basis(K, k, reduced)
    dst = basis(K, k + 1, reduced)
    cols = []
    for t in src:
        col = {}
        if k >= 0 or reduced:
            for v in range(K.nvertices):
                nf = normalize(K, (v,) + t)
                if nf is not None:
                    sign, s = nf
                    col[K.index(s)] = sign
        cols.append(col)
    return Matrix(len(dst), len(src), cols)


def homology(K: Complex, coeff: Coefficients, reduced: bool = False,
             generators: bool = False) -> dict:
    """``H_k = ker d_k / im d_{k+1}`` for every degree of K."""
    out = {}
    for k in _degrees(K, reduced):
        dk = boundary_matrix(K, k, reduced).over(coeff)
        up = boundary_matrix(K, k + 1, reduced).over(coeff)
        out[k] = homology_subquotient(kernel_basis(dk, coeff), up, coeff, generators)
    return out


def cohomology_with_reps(K: Complex, coeff: Coefficients, reduced: bool = True) -> dict:
    """``H^k = ker delta_k / im delta_{k-1}`` with representative cocycles."""
    out = {}
    for k in _degrees(K, reduced):
        dk = coboundary_matrix(K, k, reduced).over(coeff)
        down = coboundary_matrix(K, k - 1, reduced).over(coeff)
        out[k] = homology_subquotient(kernel_basis(dk, coeff), down, coeff, True)
    return out


def cohomology(K: Complex, coeff: Coefficients, reduced: bool = True) -> dict:
    out = {}
    for k in _degrees(K, reduced):
        dk = coboundary_matrix(K, k, reduced).over(coeff)
        down = coboundary_matrix(K, k - 1, reduced).over(coeff)
        out[k] = homology_subquotient(kernel_basis(dk, coeff), down, coeff, False)
    return out


def betti_table(groups: dict) -> dict:
    """``{k: (rank, torsion)}`` restricted to nonzero groups."""
    return {k: g.signature() for k, g in groups.items() if not g.is_zero()}
