"""L-homology: the E^2 page of the horizontal-filtration spectral sequence.

Two routes compute E^2:

* ``method="e1"`` builds the E^1 page as a direct sum of reduced link
  cohomologies (one summand per simplex) with the d1 differential induced by
  the cochain maps ``tau -> tau u [v_i]``, then takes homology of (E^1, d1)
  using presentations of the summands;
* ``method="direct"`` evaluates the cycle/boundary subquotient on the raw
  double complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .algebra import (ZZ, Coefficients, Echelon, FGModule, Matrix,
                      constrained_kernel, homology_subquotient, invariant_factors,
                      kernel_basis)
from .bigraded import BigradedGroups, direct_sum
from .chains import cohomology, cohomology_with_reps, normalize
from .complex import Complex, ComplexError, Simplex, link
from .double import (ComplementDoubleComplex, DoubleComplex,
                     FilteredDoubleComplex)


class _Link:
    """A link complex together with its ambient vertex ids."""

    __slots__ = ("sigma", "complex", "ids", "pos", "coh")

    def __init__(self, K: Complex, sigma: Simplex, coeff: Coefficients, reps: bool = True):
        L = link(K, sigma)
        self.sigma = sigma
        self.complex = L
        self.ids = tuple(K.vertex_id(n) for n in L.names)
        self.pos = {v: i for i, v in enumerate(self.ids)}
        self.coh = (cohomology_with_reps(L, coeff, reduced=True) if reps
                    else cohomology(L, coeff, reduced=True))

    def local(self, tau: Simplex) -> Simplex:
        return tuple(self.pos[v] for v in tau)

    def ambient(self, tau: Simplex) -> Simplex:
        return tuple(self.ids[v] for v in tau)


def _psi_matrix(src: _Link, dst: _Link, v: int, t: int, coeff: Coefficients) -> Matrix:
    """Matrix of ``tau -> tau u [v]`` from C~_t(src link) to C~_{t+1}(dst link)."""
    Ls, Ld = src.complex, dst.complex
    sb = Ls.simplices(t)
    db = Ld.simplices(t + 1)
    cols = []
    for tau in sb:
        sign, s = normalize(None, src.ambient(tau) + (v,))
        cols.append({Ld.index(dst.local(s)): coeff(sign)})
    return Matrix(len(db), len(sb), cols)


def psi_cochain(K: Complex, sigma: Simplex, i: int, coeff: Coefficients) -> dict:
    """Cochain maps ``C~_t(link sigma) -> C~_{t+1}(link sigma_i)``, keyed by t.

    ``sigma_i`` is sigma with its i-th vertex removed; the removed vertex is
    appended at the end of each tau and the result normalized.
    """
    sigma = tuple(sigma)
    if not sigma:
        raise ComplexError("psi is undefined on the empty simplex")
    if not 0 <= i < len(sigma):
        raise ComplexError(f"vertex index {i} out of range for {sigma}")
    if sigma not in K:
        raise ComplexError(f"{sigma} is not a simplex of the complex")
    src = _Link(K, sigma, coeff, reps=False)
    dst = _Link(K, sigma[:i] + sigma[i + 1:], coeff, reps=False)
    return {t: _psi_matrix(src, dst, sigma[i], t, coeff)
            for t in range(-1, src.complex.dim + 1)}


# -- E^1 -----------------------------------------------------------------------


@dataclass
class E1Page:
    """E^1 of the (reduced) L-spectral sequence in link-cohomology form.

    ``gens[(s, u)]`` lists ``(sigma, t, j, order)`` for every generator of
    ``E^1_{s,u} = sum_{|sigma|=s} H~^t(link sigma)`` with ``u = s + t + 1``;
    ``d1[(s, u)]`` is the matrix of ``E^1_{s,u} -> E^1_{s-1,u}`` in those
    generator coordinates (torsion coordinates reduced modulo their order).
    """

    K: Complex
    coeff: Coefficients
    reduced: bool
    links: dict
    gens: dict
    d1: dict = field(default_factory=dict)

    def module(self, key) -> FGModule:
        return FGModule.from_orders(o for *_, o in self.gens.get(tuple(key), []))

    def groups(self) -> BigradedGroups:
        return BigradedGroups({k: self.module(k) for k in self.gens}, self.reduced,
                              self.coeff, page=1)

    def ngens(self, key) -> int:
        return len(self.gens.get(tuple(key), ()))

    def relations(self, key) -> Matrix:
        n = self.ngens(key)
        cols = [{g: o} for g, (*_, o) in enumerate(self.gens.get(tuple(key), [])) if o]
        return Matrix(n, len(cols), cols)

    def d1_map(self, key) -> Matrix:
        key = tuple(key)
        if key in self.d1:
            return self.d1[key]
        return Matrix(self.ngens((key[0] - 1, key[1])), self.ngens(key))

    def element(self, key, cochains: dict) -> dict:
        """E^1 coordinates of ``sum_sigma [x_sigma]_sigma`` at bidegree ``key``.

        ``cochains`` maps each sigma to a cocycle ``{tau (ambient ids): coeff}``.
        """
        s, u = key
        t = u - s - 1
        out: dict = {}
        offsets = self._offsets(key)
        for sigma, cochain in cochains.items():
            lk = self.links[tuple(sigma)]
            vec = {}
            for tau, c in cochain.items():
                vec[lk.complex.index(lk.local(tuple(tau)))] = self.coeff(c)
            coords = lk.coh[t].coordinates(vec)
            base = offsets[(tuple(sigma), t)]
            for j, c in enumerate(coords):
                if c:
                    out[base + j] = c
        return out

    def _offsets(self, key) -> dict:
        off = {}
        for g, (sigma, t, j, _) in enumerate(self.gens.get(tuple(key), [])):
            if j == 0:
                off[(sigma, t)] = g
        return off

    def cycles(self, key) -> Matrix:
        key = tuple(key)
        out = self.d1_map(key)
        tgt = (key[0] - 1, key[1])
        rel = self.relations(tgt)
        if rel.ncols:
            return constrained_kernel(Matrix(0, self.ngens(key)), out, rel, self.coeff)
        return kernel_basis(out, self.coeff)

    def boundaries(self, key) -> Matrix:
        key = tuple(key)
        inc = self.d1_map((key[0] + 1, key[1]))
        rel = self.relations(key)
        return Matrix.from_columns(self.ngens(key), list(inc.cols) + list(rel.cols))

    def e2_entry(self, key) -> FGModule:
        return homology_subquotient(self.cycles(key), self.boundaries(key), self.coeff,
                                    generators=False)

    def e2(self) -> BigradedGroups:
        return BigradedGroups({k: self.e2_entry(k) for k in self.gens}, self.reduced,
                              self.coeff, page=2)

    def class_generates(self, key, vec: dict) -> bool:
        """Whether ``vec`` is a d1-cycle whose class generates E^2 at ``key``."""
        key = tuple(key)
        Z = self.cycles(key)
        zech = Echelon(Z, self.coeff)
        w = zech.solve(vec)
        if w is None:
            return False
        R = [zech.solve(c) for c in self.boundaries(key).cols if c]
        inv = invariant_factors(Matrix.from_columns(zech.rank, R + [w]), self.coeff)
        return len(inv) == zech.rank and all(d == 1 for d in inv)

    def check_d1_squared(self) -> bool:
        """``d1 . d1 == 0`` (modulo the torsion relations of the target)."""
        for (s, u) in self.gens:
            A = self.d1_map((s, u))
            B = self.d1_map((s - 1, u))
            if not A.ncols or not B.nrows:
                continue
            prod = B.matmul(A, self.coeff)
            rel = Echelon(self.relations((s - 2, u)), self.coeff)
            if any(c and not rel.contains(c) for c in prod.cols):
                return False
        return True


def e1_page(K: Complex, coeff: Coefficients, reduced: bool = True) -> E1Page:
    simplices = [s for s in K.all_simplices() if s or reduced]
    links = {sigma: _Link(K, sigma, coeff) for sigma in simplices}
    gens: dict = {}
    for sigma in simplices:
        s = len(sigma) - 1
        for t, mod in links[sigma].coh.items():
            for j, o in enumerate(mod.orders):
                gens.setdefault((s, s + t + 1), []).append((sigma, t, j, o))
    page = E1Page(K, coeff, reduced, links, gens)
    p = coeff.p
    for key, glist in gens.items():
        s, u = key
        if s < 0 or (s == 0 and not reduced):
            continue
        tgt = (s - 1, u)
        offsets = page._offsets(tgt)
        cols = []
        psi_cache: dict = {}
        for sigma, t, j, _ in glist:
            src = links[sigma]
            rep = src.coh[t].generators[j]
            col: dict = {}
            for i, v in enumerate(sigma):
                sub = sigma[:i] + sigma[i + 1:]
                dst = links[sub]
                if (sigma, i, t) not in psi_cache:
                    psi_cache[(sigma, i, t)] = _psi_matrix(src, dst, v, t, coeff)
                image = psi_cache[(sigma, i, t)].apply(rep, coeff)
                if (sub, t + 1) not in offsets:
                    continue
                base = offsets[(sub, t + 1)]
                for k, c in enumerate(dst.coh[t + 1].coordinates(image)):
                    if c:
                        col[base + k] = col.get(base + k, 0) + c
            if p:
                col = {k: c % p for k, c in col.items() if c % p}
            else:
                col = {k: c for k, c in col.items() if c}
            cols.append(col)
        page.d1[key] = Matrix(page.ngens(tgt), len(glist), cols)
    if not coeff.is_field:
        # torsion coordinates are only defined modulo their order
        for key, M in page.d1.items():
            orders = [o for *_, o in gens.get((key[0] - 1, key[1]), [])]
            for col in M.cols:
                for k in list(col):
                    if orders[k]:
                        col[k] %= orders[k]
                        if not col[k]:
                            del col[k]
    return page


# -- E^2 and higher pages --------------------------------------------------------


def l_homology(K: Complex, coeff: Coefficients = ZZ, reduced: bool = True,
               method: str = "auto") -> BigradedGroups:
    """(Reduced) L-homology of K.

    ``method``: ``"e1"`` (link cohomology and d1), ``"direct"`` (cycle and
    boundary lattices on the raw double complex) or ``"auto"`` (e1 over a
    field, direct over Z).  Both routes work for every coefficient ring.
    """
    if method == "auto":
        method = "e1" if coeff.is_field else "direct"
    if method == "e1":
        return e1_page(K, coeff, reduced).e2()
    if method == "direct":
        dc = DoubleComplex(K, reduced)
        return FilteredDoubleComplex.horizontal(dc).page(2, coeff, reduced)
    raise ValueError(f"unknown method {method!r}")


def spectral_page(K: Complex, coeff: Coefficients, r: int,
                  reduced: bool = True) -> BigradedGroups:
    """Page ``E^r`` of the horizontal-filtration spectral sequence."""
    if r < 1:
        raise ValueError("pages start at r = 1")
    if r >= 3 and not coeff.is_field:
        raise ValueError("pages r >= 3 are only supported over fields")
    dc = DoubleComplex(K, reduced)
    return FilteredDoubleComplex.horizontal(dc).page(r, coeff, reduced)


def infinity_page(K: Complex, coeff: Coefficients, reduced: bool = True) -> BigradedGroups:
    """``E^inf``: the page after every differential has left the filtration range."""
    return spectral_page(K, coeff, K.dim + 3, reduced)


# -- essential dimension and closed-form predictions -------------------------------


def essential_dimension(K: Complex, coeff: Coefficients = ZZ) -> Optional[int]:
    """The n > 0 with every nonempty link concentrated in degree ``n - |sigma| - 1``."""
    found = set()
    for sigma in K.all_simplices():
        if not sigma:
            continue
        coh = cohomology(link(K, sigma), coeff, reduced=True)
        for t, g in coh.items():
            if not g.is_zero():
                found.add(t + len(sigma))
    if len(found) == 1:
        n = found.pop()
        return n if n > 0 else None
    return None


def _G(coeff: Coefficients) -> FGModule:
    return FGModule(1)  # the coefficient group itself, as a module of rank one


def predict_example7(kind: str, n: int, coeff: Coefficients = ZZ):
    """Closed form of reduced L-homology for the full simplex and its boundary.

    Returns ``(groups, certificate)``; for ``boundary`` the certificate maps
    each facet ``sigma_i`` to the cochain ``[ ]`` so that the E^1 element
    ``sum_i [phi]_{sigma_i}`` can be checked against a computed page.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind == "full":
        return BigradedGroups({(n, n): _G(coeff)}, True, coeff), None
    if kind == "boundary":
        cert = {tuple(v for v in range(n + 1) if v != i): {(): 1} for i in range(n + 1)}
        return BigradedGroups({(n - 1, n - 1): _G(coeff)}, True, coeff), cert
    raise ValueError(f"unknown kind {kind!r}")


def predict_theorem6(K: Complex, coeff: Coefficients = ZZ):
    """Two predictions for complexes with an essential cohomology dimension n.

    ``literal`` follows the displayed formula; ``corroborated`` is the variant
    consistent with the spectral-sequence convergence argument:
    ``(s, n) = H^{n-s}`` for ``0 < s < n``, ``(-1, t) = H^t`` for ``0 <= t < n``,
    nothing at ``(0, n)`` and ``(-1, n)``, and ``(n, n) = G + H^0``.
    """
    n = essential_dimension(K, coeff)
    if n is None:
        raise ValueError("complex has no essential cohomology dimension")
    H = cohomology(K, coeff, reduced=True)

    def h(t):
        return H.get(t, FGModule())

    literal = {}
    for s in range(0, n):
        literal[(s, n)] = h(n - s)
        literal[(-1, n - s)] = h(n - s)
    literal[(n, n)] = _G(coeff)
    corrob = {}
    for s in range(1, n):
        corrob[(s, n)] = h(n - s)
    for t in range(0, n):
        corrob[(-1, t)] = h(t)
    corrob[(n, n)] = _G(coeff) + h(0)
    return (BigradedGroups(literal, True, coeff), BigradedGroups(corrob, True, coeff))


def _tensor(A: BigradedGroups, B: BigradedGroups, shift: int, reduced: bool,
            coeff: Coefficients) -> BigradedGroups:
    acc: dict = {}
    for (s1, t1), g in A:
        for (s2, t2), h in B:
            key = (s1 + s2 + shift, t1 + t2 + shift)
            acc[key] = acc.get(key, 0) + g.rank * h.rank
    return BigradedGroups({k: FGModule(r) for k, r in acc.items()}, reduced, coeff)


def predict_combination(kind: str, A: BigradedGroups, B: Optional[BigradedGroups] = None,
                        coeff: Optional[Coefficients] = None) -> BigradedGroups:
    """Predicted L-homology of a disjoint union, wedge, join, cone or product.

    ``disjoint`` and ``product`` take unreduced inputs, the others reduced.
    ``join`` and ``product`` need field coefficients.
    """
    coeff = coeff or A.coeff
    if kind in ("join", "product") and not coeff.is_field:
        raise ValueError(f"{kind} formula needs field coefficients")
    if kind == "disjoint":
        return direct_sum([A, B], False, coeff)
    if kind == "wedge":
        extra = BigradedGroups({(-1, 0): FGModule(1)}, True, coeff)
        return direct_sum([A, B, extra], True, coeff)
    if kind == "join":
        return _tensor(A, B, 1, True, coeff)
    if kind == "product":
        return _tensor(A, B, 0, False, coeff)
    if kind == "cone":
        if not A[(-1, -1)].is_zero():
            raise ValueError("cone formula needs a nonempty input complex")
        return BigradedGroups({(s + 1, t + 1): g for (s, t), g in A if s >= 0 and t >= 0},
                              True, coeff)
    raise ValueError(f"unknown combination {kind!r}")


# -- reduced vs unreduced ---------------------------------------------------------


@dataclass
class Report:
    passed: bool
    lines: list

    def __bool__(self):
        return self.passed


def reduced_unreduced_check(K: Complex, coeff: Coefficients = ZZ) -> Report:
    """Check ``0 -> LH~_{0,n} -> LH_{0,n} -> H~^n(K) -> LH~_{-1,n} -> 0``.

    The middle map is computed explicitly from d1 on the reduced E^1 page; its
    kernel and cokernel are compared with independently computed reduced
    L-homology, and ``LH_{s,n} == LH~_{s,n}`` is checked for ``s > 0``.
    """
    e1 = e1_page(K, coeff, reduced=True)
    red = l_homology(K, coeff, True, method="direct")
    unred = l_homology(K, coeff, False, method="direct")
    H = cohomology(K, coeff, reduced=True)
    lines = []
    ok = True
    for n in range(0, K.dim + 2):
        a = e1.ngens((0, n))
        A = e1.d1_map((0, n))
        rel_src = e1.boundaries((0, n))          # relations of LH_{0,n}
        rel_tgt = e1.relations((-1, n))
        ker = constrained_kernel(Matrix(0, a), A, rel_tgt, coeff)
        ker_mod = homology_subquotient(ker, rel_src, coeff, generators=False)
        b = e1.ngens((-1, n))
        coker = homology_subquotient(Matrix.identity(b, coeff(1)),
                                     Matrix.from_columns(b, list(A.cols) + list(rel_tgt.cols)),
                                     coeff, generators=False)
        middle = homology_subquotient(Matrix.identity(a, coeff(1)), rel_src, coeff,
                                      generators=False)
        hn = H.get(n, FGModule())
        checks = {
            "ker == LH~_{0,n}": ker_mod == red[(0, n)],
            "LH_{0,n}": middle == unred[(0, n)],
            "H~^n == E1_{-1,n}": hn == e1.module((-1, n)),
            "coker == LH~_{-1,n}": coker == red[(-1, n)],
        }
        if coeff.is_field:
            checks["alternating dims"] = (red[(0, n)].rank - unred[(0, n)].rank
                                          + hn.rank - red[(-1, n)].rank) == 0
        for s in range(1, K.dim + 1):
            if red[(s, n)] != unred[(s, n)]:
                checks[f"LH_{{{s},{n}}} == LH~_{{{s},{n}}}"] = False
        for name, v in checks.items():
            ok &= bool(v)
            lines.append(f"n={n} {name}: {'ok' if v else 'FAIL'}")
        lines.append(f"n={n}: 0 -> {red[(0, n)]} -> {unred[(0, n)]} -> {hn} -> {red[(-1, n)]} -> 0")
    return Report(ok, lines)


# -- R-homology (vertical filtration of the complement double complex) -------------


def r_homology(K: Complex, coeff: Coefficients = ZZ) -> BigradedGroups:
    """E_2 of the vertical filtration on ``U(K)``; all zero (flagged) when K is a full simplex."""
    U = ComplementDoubleComplex(K)
    if not U.nonfaces:
        return BigradedGroups({}, True, coeff, flags={"empty_complement": True})
    return FilteredDoubleComplex.vertical(U).page(2, coeff, True)


def r_e1(K: Complex, coeff: Coefficients = ZZ) -> BigradedGroups:
    """E_1 of the vertical filtration computed directly on ``U(K)``."""
    U = ComplementDoubleComplex(K)
    return FilteredDoubleComplex.vertical(U).page(1, coeff, True)


def r_e1_from_restrictions(K: Complex, coeff: Coefficients = ZZ) -> BigradedGroups:
    """``sum over non-faces tau of H~_*(K|tau)``, placed at ``(s, |tau|)``."""
    from itertools import combinations

    from .chains import homology

    parts = []
    n = K.nvertices
    for k in range(1, n + 1):
        for tau in combinations(range(n), k):
            if tau in K:
                continue
            H = homology(_restrict(K, tau), coeff, reduced=True)
            parts.append(BigradedGroups({(s, k - 1): g for s, g in H.items()}, True, coeff))
    return direct_sum(parts, True, coeff)


def _restrict(K: Complex, verts) -> Complex:
    verts = sorted(verts)
    pos = {v: i for i, v in enumerate(verts)}
    return Complex([K.names[v] for v in verts],
                   [[pos[v] for v in s] for s in K.all_simplices() if set(s) <= set(verts)])
