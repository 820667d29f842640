import pytest

from lhomology.algebra import GF, QQ, ZZ, FGModule
from lhomology.chains import (boundary_matrix, coboundary_matrix, cohomology,
                              cohomology_with_reps, homology, normalize)
from lhomology.complex import empty_complex, point, standard_complex
from lhomology.corpus import rp2, sphere0

from conftest import corpus_params


def test_normalize():
    D2 = standard_complex("full", 2)
    assert normalize(D2, (1, 0)) == (-1, (0, 1))
    assert normalize(D2, (2, 0, 1)) == (1, (0, 1, 2))
    assert normalize(D2, (0, 0)) is None
    assert normalize(standard_complex("boundary", 2), (0, 1, 2)) is None


def test_boundary_examples():
    D1 = standard_complex("full", 1)
    assert boundary_matrix(D1, 1, False).to_dense() == [[-1], [1]]
    assert boundary_matrix(point(), 0, True).to_dense() == [[1]]
    assert boundary_matrix(point(), 0, False).is_zero()


def test_coboundary_examples():
    D1 = standard_complex("full", 1)
    assert coboundary_matrix(D1, 0, False).to_dense()[0][0] == -1
    B2 = standard_complex("boundary", 2)
    assert coboundary_matrix(B2, -1, True).to_dense() == [[1], [1], [1]]


@corpus_params()
def test_squares_vanish_and_transpose(name, K):
    for reduced in (True, False):
        lo = -1 if reduced else 0
        for k in range(lo, K.dim + 1):
            d = boundary_matrix(K, k, reduced)
            assert boundary_matrix(K, k - 1, reduced).matmul(d).is_zero() if k - 1 >= lo else True
            delta = coboundary_matrix(K, k, reduced)
            assert coboundary_matrix(K, k + 1, reduced).matmul(delta).is_zero()
            assert delta == boundary_matrix(K, k + 1, reduced).transpose()


def test_homology_examples():
    H = homology(standard_complex("boundary", 3), ZZ, reduced=True)
    assert {k: g.signature() for k, g in H.items() if not g.is_zero()} == {2: (1, ())}
    assert all(g.is_zero() for g in homology(standard_complex("full", 4), ZZ, True).values())
    assert homology(rp2(), ZZ)[1] == FGModule(0, [2])
    assert homology(rp2(), GF(2))[2] == FGModule(1)
    assert homology(rp2(), QQ)[2].is_zero()


def test_cohomology_examples():
    H = cohomology_with_reps(empty_complex(), ZZ, True)
    assert H[-1] == FGModule(1) and H[-1].generators == [{0: 1}]
    H = cohomology_with_reps(sphere0(), ZZ, True)
    assert H[0] == FGModule(1)
    # [a] + [b] is a coboundary, so [a] and -[b] are the same class
    assert H[0].coordinates({0: 1}) == [-c for c in H[0].coordinates({1: 1})]
    assert cohomology(standard_complex("boundary", 2), ZZ)[1] == FGModule(1)
    assert cohomology(rp2(), ZZ)[2] == FGModule(0, [2])


@corpus_params()
def test_reduced_vs_unreduced(name, K):
    red = homology(K, ZZ, True)
    unred = homology(K, ZZ, False)
    if K.nvertices:
        assert red[0].rank == unred[0].rank - 1
    for k in range(1, K.dim + 1):
        assert red[k] == unred[k]


@corpus_params(small=True)
def test_universal_coefficients_mod_p(name, K):
    for p in (2, 3):
        F = GF(p)
        H = homology(K, F)
        C = cohomology(K, F, reduced=False)
        assert all(H[k].rank == C[k].rank for k in H)
