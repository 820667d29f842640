"""Named test complexes and a seeded random batch."""

from __future__ import annotations

import random

from .complex import (Complex, build_complex, cartesian_product, cone, disjoint_union,
                      join, point, standard_complex, wedge)

RP2_6 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
         (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]


def rp2() -> Complex:
    """Six-vertex real projective plane."""
    return build_complex([[str(v) for v in f] for f in RP2_6],
                         declared_order=[str(v) for v in range(1, 7)])


def sphere0() -> Complex:
    return Complex(["a", "b"], [(0,), (1,)])


def cycle(n: int) -> Complex:
    return Complex([f"c{i}" for i in range(n)], [(i, (i + 1) % n) if i + 1 < n else (0, n - 1)
                                                 for i in range(n)])


def path(n: int) -> Complex:
    """Path with ``n`` edges."""
    return Complex([f"p{i}" for i in range(n + 1)], [(i, i + 1) for i in range(n)])


def random_batch(seed: int = 7, count: int = 20, max_vertices: int = 8, max_dim: int = 3):
    from .oracle import random_complex
    out = []
    for i in range(count):
        K, _ = random_complex(random.Random(f"corpus:{seed}:{i}"), max_vertices, max_dim)
        out.append((f"random{i}", K))
    return out


def named_corpus() -> list:
    S1 = standard_complex("boundary", 2)
    items = [("pt", point()), ("S0", sphere0())]
    for n in range(1, 6):
        items.append((f"simplex{n}", standard_complex("full", n)))
        items.append((f"boundary{n}", standard_complex("boundary", n)))
    items += [
        ("cycle4", cycle(4)),
        ("path2", path(2)),
        ("interval_x_interval", cartesian_product(standard_complex("full", 1),
                                                  standard_complex("full", 1))),
        ("torus_like", cartesian_product(S1, S1)),
        ("cone_S1", cone(S1)),
        ("S0_join_S0", join(sphere0(), sphere0())),
        ("S1_plus_pt", disjoint_union(S1, point())),
        ("S1_wedge_S1", wedge(S1, S1)),
        ("RP2", rp2()),
    ]
    return items


def full_corpus(seed: int = 7) -> list:
    return named_corpus() + random_batch(seed)
