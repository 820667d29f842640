"""Randomized invariants of L-homology."""
import random

from hypothesis import given, settings, strategies as st

from lhomology.algebra import GF, QQ, ZZ
from lhomology.complex import build_complex, cartesian_product, stellar_subdivision
from lhomology.lhom import l_homology
from lhomology.oracle import e2_direct, random_complex

seeds = st.integers(0, 2 ** 32)


def draw(seed, nv=7, dim=3):
    return random_complex(random.Random(seed), nv, dim)[0]


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_relabeling_invariance(seed):
    K = draw(seed)
    perm = list(range(K.nvertices))
    random.Random(seed + 1).shuffle(perm)
    for coeff in (ZZ, GF(2)):
        assert l_homology(K.relabel(perm), coeff) == l_homology(K, coeff)


@settings(max_examples=30, deadline=None)
@given(seeds, st.integers(0, 10 ** 6))
def test_stellar_invariance(seed, pick):
    K = draw(seed)
    faces = [s for s in K.all_simplices() if s]
    L = stellar_subdivision(K, faces[pick % len(faces)])
    for reduced in (True, False):
        assert l_homology(L, ZZ, reduced) == l_homology(K, ZZ, reduced)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_rational_rank_is_free_rank(seed):
    K = draw(seed)
    z, q = l_homology(K, ZZ), l_homology(K, QQ)
    assert q.ranks() == {k: r for k, r in z.ranks().items() if r}


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_main_path_matches_oracle(seed):
    K = draw(seed, nv=6)
    for coeff in (ZZ, GF(3)):
        assert l_homology(K, coeff) == e2_direct(K, coeff)


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_product_independent_of_vertex_order(seed):
    rng = random.Random(seed)
    K = draw(seed, nv=4, dim=2)
    L = draw(seed + 7, nv=3, dim=1)
    facets = [[K.names[v] for v in s] for s in K.maximal_simplices() if s]
    order = list(K.names)
    rng.shuffle(order)
    K2 = build_complex(facets, order)
    assert l_homology(cartesian_product(K, L), GF(2), False) \
        == l_homology(cartesian_product(K2, L), GF(2), False)
