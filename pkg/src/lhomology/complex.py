"""Finite abstract simplicial complexes and their combinatorial constructions.

A simplex is a strictly ascending tuple of dense vertex ids; ``()`` is the
empty simplex of dimension -1, which every complex contains.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

Simplex = tuple


class ComplexError(ValueError):
    pass


class Complex:
    """Immutable downward-closed family of vertex subsets.

    Vertex ids are ``0..m-1`` in declared order and ``names[i]`` is the display
    name of vertex ``i``.  Simplices are stored per dimension in
    lexicographic order.
    """

    __slots__ = ("names", "_faces", "_set", "_index", "_name_id")

    def __init__(self, names: Sequence[str], simplices: Iterable[Sequence[int]]):
        names = tuple(str(n) for n in names)
        if len(set(names)) != len(names):
            raise ComplexError(f"vertex names are not unique: {names}")
        closed = {()}
        for s in simplices:
            s = tuple(sorted(s))
            if len(set(s)) != len(s):
                raise ComplexError(f"repeated vertex in simplex {s}")
            if s and not (0 <= s[0] and s[-1] < len(names)):
                raise ComplexError(f"simplex {s} uses an unknown vertex id")
            if s in closed:
                continue
            for k in range(len(s)):
                closed.update(combinations(s, k))
            closed.add(s)
        closed.update((v,) for v in range(len(names)))
        top = max(map(len, closed))
        faces = [[] for _ in range(top + 1)]
        for s in closed:
            faces[len(s)].append(s)
        self.names = names
        self._faces = tuple(tuple(sorted(f)) for f in faces)
        self._set = frozenset(closed)
        self._index = tuple({s: i for i, s in enumerate(f)} for f in self._faces)
        self._name_id = {n: i for i, n in enumerate(names)}

    # -- basic queries --------------------------------------------------------

    @property
    def nvertices(self) -> int:
        return len(self.names)

    @property
    def dim(self) -> int:
        return len(self._faces) - 2

    def simplices(self, k: int) -> tuple:
        """Simplices of dimension ``k`` (``k = -1`` gives ``((),)``)."""
        if k < -1 or k + 1 >= len(self._faces):
            return ()
        return self._faces[k + 1]

    def all_simplices(self) -> list:
        return [s for f in self._faces for s in f]

    def index(self, simplex: Simplex) -> int:
        """Position of ``simplex`` within its dimension's canonical list."""
        return self._index[len(simplex)][simplex]

    def f_vector(self) -> tuple:
        return tuple(len(f) for f in self._faces[1:])

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self._set

    def __len__(self) -> int:
        return len(self._set)

    def __iter__(self):
        return iter(self.all_simplices())

    def vertex_id(self, name: str) -> int:
        try:
            return self._name_id[name]
        except KeyError:
            raise ComplexError(f"unknown vertex {name!r}") from None

    def simplex(self, names: Iterable[str]) -> Simplex:
        """Canonical simplex from vertex names; raises if it is not in the complex."""
        s = tuple(sorted(self.vertex_id(n) for n in names))
        if s not in self._set:
            raise ComplexError(f"{self.label(s)} is not a simplex of the complex")
        return s

    def label(self, simplex: Simplex) -> str:
        return "[" + ",".join(self.names[v] for v in simplex) + "]"

    def maximal_simplices(self) -> list:
        out = []
        verts = range(self.nvertices)
        for f in self._faces:
            for s in f:
                if not any(tuple(sorted(s + (v,))) in self._set for v in verts if v not in s):
                    out.append(s)
        return out

    def is_full_simplex(self) -> bool:
        return len(self._set) == 2 ** self.nvertices

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * f for k, f in enumerate(self.f_vector()))

    def relabel(self, perm: Sequence[int]) -> "Complex":
        """Complex with vertex ``i`` moved to id ``perm[i]`` (names travel along)."""
        names = [None] * self.nvertices
        for i, j in enumerate(perm):
            names[j] = self.names[i]
        return Complex(names, [[perm[v] for v in s] for s in self._set])

    def __eq__(self, other):
        return (isinstance(other, Complex) and self.names == other.names
                and self._set == other._set)

    def __hash__(self):
        return hash((self.names, self._set))

    def __repr__(self):
        return f"<Complex m={self.nvertices} f={self.f_vector()}>"


def validate(K: Complex) -> bool:
    """Check the Definition-1 axioms: empty simplex, vertices, downward closure."""
    if () not in K:
        return False
    if any((v,) not in K for v in range(K.nvertices)):
        return False
    for s in K:
        for k in range(len(s)):
            if any(t not in K for t in combinations(s, k)):
                return False
    return True


def build_complex(maximal_simplices: Iterable[Iterable[str]],
                  declared_order: Optional[Sequence[str]] = None) -> Complex:
    """Downward closure of simplices given by vertex names.

    Vertex order is ``declared_order`` when given, otherwise first appearance.
    """
    facets = [list(s) for s in maximal_simplices]
    for s in facets:
        if len(set(s)) != len(s):
            raise ComplexError(f"duplicate vertex in simplex {s}")
    if declared_order is not None:
        names = list(declared_order)
        if len(set(names)) != len(names):
            raise ComplexError("declared vertex order repeats a name")
        known = set(names)
        for s in facets:
            for n in s:
                if n not in known:
                    raise ComplexError(f"vertex {n!r} missing from declared order")
    else:
        names = []
        seen = set()
        for s in facets:
            for n in s:
                if n not in seen:
                    seen.add(n)
                    names.append(n)
    pos = {n: i for i, n in enumerate(names)}
    return Complex(names, [[pos[n] for n in s] for s in facets])


def skeleton_stats(K: Complex):
    """f-vector together with the canonical per-dimension simplex lists."""
    return K.f_vector(), [list(K.simplices(k)) for k in range(K.dim + 1)]


def link(K: Complex, sigma: Simplex) -> Complex:
    """``link_K(sigma)`` on the induced vertex subset, ambient order kept."""
    ids, faces = link_faces(K, sigma)
    pos = {v: i for i, v in enumerate(ids)}
    return Complex([K.names[v] for v in ids], [[pos[v] for v in t] for t in faces])


def link_faces(K: Complex, sigma: Simplex):
    """Ambient vertex ids of the link and its simplices in ambient ids."""
    sigma = tuple(sigma)
    if sigma not in K:
        raise ComplexError(f"{sigma} is not a simplex of the complex")
    if not sigma:
        return tuple(range(K.nvertices)), K.all_simplices()
    ss = set(sigma)
    faces = []
    for eta in K.all_simplices():
        if len(eta) >= len(sigma) and ss.issubset(eta):
            faces.append(tuple(v for v in eta if v not in ss))
    ids = tuple(sorted({v for t in faces for v in t}))
    return ids, faces


# -- constructors ------------------------------------------------------------


def standard_complex(kind: str, n: int) -> Complex:
    """``full``: the n-simplex with all faces; ``boundary``: its proper faces."""
    if n < 0:
        raise ComplexError("dimension must be non-negative")
    names = [_letter(i) for i in range(n + 1)]
    if kind == "full":
        return Complex(names, [tuple(range(n + 1))])
    if kind == "boundary":
        if n == 0:
            return empty_complex()   # the point has only the empty proper face
        return Complex(names, [tuple(c) for c in combinations(range(n + 1), n)])
    raise ComplexError(f"unknown standard complex kind {kind!r}")


def _letter(i: int) -> str:
    return "abcdefghijklmnopqrstuvwxyz"[i] if i < 26 else f"v{i}"


def point(name: str = "a") -> Complex:
    return Complex([name], [(0,)])


def empty_complex() -> Complex:
    return Complex([], [])


def _merge_names(left: Sequence[str], right: Sequence[str]) -> list:
    taken = set(left)
    out = list(left)
    for n in right:
        while n in taken:
            n = n + "'"
        taken.add(n)
        out.append(n)
    return out


def _fresh_name(names: Iterable[str]) -> str:
    taken = set(names)
    k = 0
    while f"sd{k}" in taken:
        k += 1
    return f"sd{k}"


def join(K: Complex, L: Complex) -> Complex:
    """``K * L``: all disjoint unions of a simplex of K with one of L."""
    m = K.nvertices
    names = _merge_names(K.names, L.names)
    Lmax = [tuple(m + v for v in t) for t in L.maximal_simplices()]
    return Complex(names, [s + t for s in K.maximal_simplices() for t in Lmax])


def cone(K: Complex) -> Complex:
    apex = Complex([_fresh_name(K.names)], [(0,)])
    return join(K, apex)


def disjoint_union(K: Complex, L: Complex) -> Complex:
    m = K.nvertices
    names = _merge_names(K.names, L.names)
    return Complex(names, list(K.maximal_simplices())
                   + [tuple(m + v for v in t) for t in L.maximal_simplices()])


def wedge(K: Complex, L: Complex, bk: Optional[int] = None,
          bl: Optional[int] = None) -> Complex:
    """One-point union identifying vertex ``bl`` of L with ``bk`` of K."""
    if K.nvertices == 0 or L.nvertices == 0:
        raise ComplexError("wedge needs nonempty complexes")
    bk = 0 if bk is None else bk
    bl = 0 if bl is None else bl
    if not (0 <= bk < K.nvertices) or not (0 <= bl < L.nvertices):
        raise ComplexError("wedge basepoint missing")
    m = K.nvertices
    others = [v for v in range(L.nvertices) if v != bl]
    new_id = {bl: bk}
    new_id.update({v: m + i for i, v in enumerate(others)})
    names = _merge_names(K.names, [L.names[v] for v in others])
    return Complex(names, list(K.maximal_simplices())
                   + [tuple(new_id[v] for v in t) for t in L.maximal_simplices()])


def cartesian_product(K: Complex, L: Complex) -> Complex:
    """Staircase product: monotone chains in sigma x tau under the vertex orders.

    Vertex ``(i, j)`` gets id ``i * |T| + j`` (lexicographic order).
    """
    m, n = K.nvertices, L.nvertices
    names = [f"({a},{b})" for a in K.names for b in L.names]
    if m == 0 or n == 0:
        return Complex([], [])
    facets = []
    for s in K.maximal_simplices():
        for t in L.maximal_simplices():
            for path in _staircases(len(s) - 1, len(t) - 1):
                facets.append([s[i] * n + t[j] for i, j in path])
    return Complex(names, facets)


def _staircases(a: int, b: int):
    """All monotone lattice paths from (0, 0) to (a, b) as point lists."""
    if a == 0 and b == 0:
        yield [(0, 0)]
        return
    if a > 0:
        for p in _staircases(a - 1, b):
            yield p + [(a, b)]
    if b > 0:
        for p in _staircases(a, b - 1):
            yield p + [(a, b)]


def stellar_subdivision(K: Complex, sigma: Simplex) -> Complex:
    """Stellar subdivision of K on ``sigma``; the new vertex gets the last id."""
    sigma = tuple(sigma)
    if sigma not in K:
        raise ComplexError(f"{sigma} is not a simplex of the complex")
    if not sigma:
        return K
    fresh = _fresh_name(K.names)
    m = K.nvertices
    if len(sigma) == 1:
        w = sigma[0]
        new_id = {v: (v if v < w else v - 1) for v in range(m) if v != w}
        new_id[w] = m - 1
        names = [K.names[v] for v in range(m) if v != w] + [fresh]
        return Complex(names, [[new_id[v] for v in s] for s in K.maximal_simplices()])
    ss = set(sigma)
    keep = [s for s in K if not ss.issubset(s)]
    _, lk = link_faces(K, sigma)
    boundary = [c for k in range(len(sigma)) for c in combinations(sigma, k)]
    star = [(m,) + f + t for f in boundary for t in lk]
    return Complex(list(K.names) + [fresh], keep + star)


def is_isomorphic(K: Complex, L: Complex) -> bool:
    """Brute-force simplicial isomorphism test (intended for small complexes)."""
    if K.f_vector() != L.f_vector():
        return False
    target = {tuple(s) for s in L}
    for perm in permutations(range(L.nvertices)):
        if all(tuple(sorted(perm[v] for v in s)) in target for s in K.maximal_simplices()):
            return True
    return False
