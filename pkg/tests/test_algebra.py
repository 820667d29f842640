import random

import pytest
from hypothesis import given, settings, strategies as st

from lhomology.algebra import (GF, QQ, ZZ, Coefficients, FGModule, Matrix,
                               constrained_kernel, homology_subquotient, invariant_factors,
                               kernel_basis, rank, smith_normal_form)
from lhomology.oracle import int_invariants


def det(rows):
    # cofactor expansion; tiny matrices only
    if not rows:
        return 1
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]])
               for j in range(len(rows)))


def test_coefficient_parsing():
    assert Coefficients.parse("Z") == ZZ
    assert Coefficients.parse("Q") == QQ
    assert Coefficients.parse("F7") == GF(7)
    assert str(GF(3)) == "F3"
    with pytest.raises(ValueError):
        Coefficients.parse("F4")
    with pytest.raises(ValueError):
        Coefficients.parse("R")


def test_snf_examples():
    assert smith_normal_form([[2, 4], [6, 8]])[0] == (2, 4)
    assert smith_normal_form(Matrix.identity(3))[0] == (1, 1, 1)
    assert smith_normal_form([[0, 0], [0, 0]])[0] == ()


def test_snf_big_integers():
    big = 10 ** 30
    f, U, V = smith_normal_form([[big, 0], [0, 3 * big]])
    assert f == (big, 3 * big)


def test_snf_transform_identity_random():
    rng = random.Random(0)
    for _ in range(100):
        M = [[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)]
        f, U, V = smith_normal_form(M)
        D = (U @ Matrix.from_dense(M) @ V).to_dense()
        want = [[f[i] if i == j and i < len(f) else 0 for j in range(6)] for i in range(6)]
        assert D == want
        assert all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
        assert abs(det(U.to_dense())) == 1 and abs(det(V.to_dense())) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=4, max_size=4), min_size=1, max_size=5))
def test_snf_matches_oracle(rows):
    f, _, _ = smith_normal_form(rows)
    assert list(f) == int_invariants(rows)
    assert list(f) == invariant_factors(Matrix.from_dense(rows))


def test_kernel_examples():
    # boundary of the triangle circle, columns ab, ac, bc
    M = Matrix.from_dense([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
    K = kernel_basis(M, ZZ)
    assert K.ncols == 1
    v = K.to_dense()
    assert {tuple(r[0] for r in v), tuple(-r[0] for r in v)} >= {(1, -1, 1)}
    # the map read transposed: x = y = z
    K2 = kernel_basis(M.transpose(), ZZ)
    col = [r[0] for r in K2.to_dense()]
    assert abs(col[0]) == 1 and col[0] == col[1] == col[2]
    assert kernel_basis(Matrix.identity(3), QQ).ncols == 0
    assert kernel_basis(Matrix(2, 3), ZZ).ncols == 3


def test_integer_kernel_is_saturated():
    M = Matrix.from_dense([[2, 4, 6], [1, 3, 5]])
    K = kernel_basis(M, ZZ)
    assert all(d == 1 for d in invariant_factors(K))
    assert M.matmul(K).is_zero()


def test_constrained_kernel_examples():
    A = Matrix.from_dense([[1, -1, 0]])
    I3 = Matrix.identity(3)
    assert rank(constrained_kernel(A, I3, I3, ZZ), ZZ) == 2
    B = Matrix.from_dense([[1, 0, 0]])
    got = constrained_kernel(A, B, Matrix(1, 0), QQ)
    assert got.ncols == 1 and all(not c for c in (A.apply(got.cols[0]), B.apply(got.cols[0])))
    got = constrained_kernel(Matrix(0, 1), Matrix.from_dense([[2]]), Matrix.from_dense([[4]]), ZZ)
    assert got.to_dense() in ([[2]], [[-2]])
    with pytest.raises(ValueError):
        constrained_kernel(A, Matrix(2, 2), I3, ZZ)


def test_subquotient_examples():
    I3 = Matrix.identity(3)
    B = Matrix.from_dense([[1, -1], [1, 0], [0, 1]])
    assert homology_subquotient(I3, B, ZZ) == FGModule(1)
    assert homology_subquotient(Matrix.from_dense([[1]]), Matrix.from_dense([[2]]), ZZ) \
        == FGModule(0, [2])
    assert homology_subquotient(I3, I3, ZZ).is_zero()
    assert homology_subquotient(Matrix.from_dense([[1]]), Matrix.from_dense([[2]]), QQ).is_zero()
    with pytest.raises(ValueError):
        homology_subquotient(Matrix.from_dense([[2]]), Matrix.from_dense([[1]]), ZZ)


def test_subquotient_generators_and_coordinates():
    Z = Matrix.identity(2)
    B = Matrix.from_dense([[2], [0]])
    H = homology_subquotient(Z, B, ZZ)
    assert H.signature() == (1, (2,))
    assert H.coordinates({0: 3}) in ([1, 0],)
    assert H.coordinates({1: 1})[0] == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_subquotient_invariant_under_basis_change(seed):
    rng = random.Random(seed)
    n = 4
    Zrows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    Z = Matrix.from_dense(Zrows)
    coeffs = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(n)]
    Bnd = Z @ Matrix.from_dense(coeffs)
    base = homology_subquotient(Z, Bnd, ZZ, generators=False)
    # random unimodular change of the generating sets
    P = Matrix.identity(n)
    for _ in range(5):
        i, j = rng.sample(range(n), 2)
        E = [[int(a == b) for b in range(n)] for a in range(n)]
        E[i][j] = rng.randint(-3, 3)
        P = P @ Matrix.from_dense(E)
    Q = Matrix.identity(3)
    for _ in range(3):
        i, j = rng.sample(range(3), 2)
        E = [[int(a == b) for b in range(3)] for a in range(3)]
        E[i][j] = rng.randint(-3, 3)
        Q = Q @ Matrix.from_dense(E)
    assert homology_subquotient(Z @ P, Bnd @ Q, ZZ, generators=False) == base
    assert homology_subquotient(Z @ P, Bnd @ Q, ZZ, generators=True) == base


def test_fgmodule_normal_form():
    assert FGModule.from_orders([2, 3]) == FGModule(0, [6])
    assert FGModule.from_orders([0, 4, 2, 1]) == FGModule(1, [2, 4])
    assert str(FGModule(2, [2])) == "Z^2 + Z/2"
    with pytest.raises(ValueError):
        FGModule(0, [2, 3])


def test_prime_field_arithmetic():
    F = GF(5)
    M = Matrix.from_dense([[1, 2], [3, 1]]).over(F)   # det = -5 = 0 mod 5
    assert rank(M, F) == 1
    assert rank(Matrix.from_dense([[1, 2], [3, 1]]), QQ) == 2
