"""The double complexes T(K), T~(K) and U(K), and spectral-sequence pages.

``T_{s,t}`` is spanned by pairs ``sigma (x) eta`` of simplices with
``sigma`` a face of ``eta``, ``|sigma| = s``, ``|eta| = t``.  The two
differentials are

    D(sigma (x) eta)     = (d sigma) (x) eta                 (s, t) -> (s-1, t)
    Delta(sigma (x) eta) = (-1)^|sigma| sigma (x) delta eta  (s, t) -> (s, t+1)

and they anticommute, so ``D + Delta`` is a differential of degree +1 for
the total grading ``n = t - s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .algebra import (Coefficients, Echelon, FGModule, Matrix, block_matrix,
                      homology_subquotient, image_basis, invariant_factors,
                      kernel_basis)
from .bigraded import BigradedGroups
from .chains import normalize, permutation_sign
from .complex import Complex, Simplex


def _insert_sign(v: int, eta: Simplex):
    """Normalize ``[v, eta]``: returns ``(sign, simplex)`` or None if v is in eta."""
    k = 0
    for w in eta:
        if w == v:
            return None
        if w < v:
            k += 1
    return (-1) ** k, eta[:k] + (v,) + eta[k:]


class DoubleComplex:
    """Bigraded basis and the sparse matrices of ``D`` and ``Delta``.

    ``D[(s, t)]`` maps ``T_{s,t} -> T_{s-1,t}`` and ``Delta[(s, t)]`` maps
    ``T_{s,t} -> T_{s,t+1}``; absent keys mean zero maps between empty blocks.
    """

    def __init__(self, K: Complex, reduced: bool = True):
        self.K = K
        self.reduced = reduced
        basis: dict = {}
        for eta in K.all_simplices():
            if not eta and not reduced:
                continue
            lo = 0 if reduced else 1
            for k in range(lo, len(eta) + 1):
                for sigma in combinations(eta, k):
                    basis.setdefault((k - 1, len(eta) - 1), []).append((sigma, eta))
        self.basis = {key: sorted(b) for key, b in sorted(basis.items())}
        self.index = {key: {pair: i for i, pair in enumerate(b)}
                      for key, b in self.basis.items()}
        self.D: dict = {}
        self.Delta: dict = {}
        n = K.nvertices
        for (s, t), pairs in self.basis.items():
            dst = self.index.get((s - 1, t), {})
            cols = []
            for sigma, eta in pairs:
                col = {}
                if s > 0 or (s == 0 and reduced):
                    for i in range(len(sigma)):
                        col[dst[(sigma[:i] + sigma[i + 1:], eta)]] = (-1) ** i
                cols.append(col)
            self.D[(s, t)] = Matrix(len(dst), len(pairs), cols)
            dst = self.index.get((s, t + 1), {})
            sgn = -1 if s % 2 else 1
            cols = []
            for sigma, eta in pairs:
                col = {}
                for v in range(n):
                    ins = _insert_sign(v, eta)
                    if ins is None or ins[1] not in K:
                        continue
                    col[dst[(sigma, ins[1])]] = sgn * ins[0]
                cols.append(col)
            self.Delta[(s, t)] = Matrix(len(dst), len(pairs), cols)

    def dims(self) -> dict:
        return {k: len(b) for k, b in self.basis.items()}

    def dim(self, key) -> int:
        return len(self.basis.get(tuple(key), ()))

    def keys(self):
        return self.basis.keys()

    def total_dim(self) -> int:
        return sum(map(len, self.basis.values()))

    def zero_map(self, src, dst) -> Matrix:
        return Matrix(self.dim(dst), self.dim(src))

    def d_map(self, key) -> Matrix:
        key = tuple(key)
        if key in self.D:
            return self.D[key]
        return self.zero_map(key, (key[0] - 1, key[1]))

    def delta_map(self, key) -> Matrix:
        key = tuple(key)
        if key in self.Delta:
            return self.Delta[key]
        return self.zero_map(key, (key[0], key[1] + 1))

    def vector(self, terms: dict) -> dict:
        """Sparse coordinates of ``{(sigma, eta): coeff}`` (one bidegree)."""
        out = {}
        for (sigma, eta), c in terms.items():
            out[self.index[(len(sigma) - 1, len(eta) - 1)][(sigma, eta)]] = c
        return out


# -- the link description ------------------------------------------------------


def rho(K: Complex, dc: Optional[DoubleComplex] = None) -> dict:
    """``sigma (x) eta -> (sigma, eta - sigma, sign)`` on every basis pair.

    ``sign`` is the parity of the permutation sorting the concatenation
    ``(eta - sigma, sigma)`` into ascending ``eta``.
    """
    dc = dc or DoubleComplex(K, reduced=True)
    out = {}
    for pairs in dc.basis.values():
        for sigma, eta in pairs:
            tau = tuple(v for v in eta if v not in sigma)
            out[(sigma, eta)] = (sigma, tau, permutation_sign(tau + sigma))
    return out


def link_differential(K: Complex, sigma: Simplex, tau: Simplex) -> dict:
    """``d[tau]_sigma = sum_i [tau u [v_i]]_{sigma_i} + (-1)^|sigma| [delta tau]_sigma``.

    Terms are returned as ``{(sigma', tau'): coeff}`` with tau' ascending; the
    coboundary of tau is taken inside ``link_K(sigma)``.
    """
    out: dict = {}

    def add(key, c):
        out[key] = out.get(key, 0) + c
        if not out[key]:
            del out[key]

    for i, v in enumerate(sigma):
        sub = sigma[:i] + sigma[i + 1:]
        sign, t2 = normalize(None, tau + (v,))
        add((sub, t2), sign)
    sgn = -1 if (len(sigma) - 1) % 2 else 1
    ss = set(sigma)
    for v in range(K.nvertices):
        if v in ss:
            continue
        ins = _insert_sign(v, tau)
        if ins is None:
            continue
        sign, t2 = ins
        if tuple(sorted(t2 + sigma)) in K:
            add((sigma, t2), sgn * sign)
    return out


def check_rho_intertwines(K: Complex) -> bool:
    """``rho . del == del' . rho`` on every basis element of T~(K)."""
    dc = DoubleComplex(K, reduced=True)
    r = rho(K, dc)
    for (s, t), pairs in dc.basis.items():
        D = dc.d_map((s, t))
        Dl = dc.delta_map((s, t))
        lower = dc.basis.get((s - 1, t), [])
        upper = dc.basis.get((s, t + 1), [])
        for j, pair in enumerate(pairs):
            lhs: dict = {}
            for i, c in D.cols[j].items():
                sg, tau, sign = r[lower[i]]
                lhs[(sg, tau)] = lhs.get((sg, tau), 0) + c * sign
            for i, c in Dl.cols[j].items():
                sg, tau, sign = r[upper[i]]
                lhs[(sg, tau)] = lhs.get((sg, tau), 0) + c * sign
            lhs = {k: v for k, v in lhs.items() if v}
            sg, tau, sign = r[pair]
            rhs = {k: sign * v for k, v in link_differential(K, sg, tau).items()}
            if lhs != rhs:
                return False
    return True


# -- generic pages of a filtered double complex --------------------------------


class FilteredDoubleComplex:
    """A double complex viewed through one of its two filtrations.

    ``d0`` preserves the filtration degree and ``d1`` lowers it by one; both
    are dicts ``key -> Matrix`` with keys ``(s, t)`` and fixed index shifts.
    """

    def __init__(self, dims: dict, d0: dict, d0_shift, d1: dict, d1_shift):
        self.dims = dims
        self.d0 = d0
        self.d1 = d1
        self.d0_shift = tuple(d0_shift)
        self.d1_shift = tuple(d1_shift)

    @classmethod
    def horizontal(cls, dc) -> "FilteredDoubleComplex":
        """Filtration by ``s`` (columns): ``d0 = Delta``, ``d1 = D``."""
        return cls(dc.dims(), dc.Delta, (0, 1), dc.D, (-1, 0))

    @classmethod
    def vertical(cls, dc) -> "FilteredDoubleComplex":
        """Filtration by ``t`` (rows, decreasing): ``d0 = D``, ``d1 = Delta``."""
        return cls(dc.dims(), dc.D, (-1, 0), dc.Delta, (0, 1))

    def _dim(self, key):
        return self.dims.get(key, 0)

    def _map(self, maps, shift, key, coeff) -> Matrix:
        tgt = (key[0] + shift[0], key[1] + shift[1])
        m = maps.get(key)
        if m is None or m.nrows != self._dim(tgt):
            return Matrix(self._dim(tgt), self._dim(key))
        return m.over(coeff)

    def _add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _scale(self, a, k):
        return (a[0] * k, a[1] * k)

    def cycles(self, key, r: int, coeff: Coefficients) -> Matrix:
        """Leading parts ``x_0`` of zig-zags ``x_0, ..., x_{r-1}`` whose total
        differential vanishes through r filtration steps."""
        step = self._add(self.d1_shift, self._scale(self.d0_shift, -1))
        keys = [self._add(key, self._scale(step, j)) for j in range(r)]
        cols = [self._dim(k) for k in keys]
        rows = [self._dim(self._add(k, self.d0_shift)) for k in keys]
        blocks = {}
        for j, k in enumerate(keys):
            blocks[(j, j)] = self._map(self.d0, self.d0_shift, k, coeff)
            if j + 1 < r:
                blocks[(j + 1, j)] = self._map(self.d1, self.d1_shift, k, coeff)
        M = block_matrix(rows, cols, blocks)
        K = kernel_basis(M, coeff)
        n0 = cols[0]
        proj = [{i: v for i, v in c.items() if i < n0} for c in K.cols]
        return image_basis(Matrix.from_columns(n0, proj), coeff)

    def boundaries(self, key, r: int, coeff: Coefficients) -> Matrix:
        """Leading parts at ``key`` of differentials of elements r-1 steps up."""
        n = self._dim(key)
        y0 = self._add(key, self._scale(self.d0_shift, -1))
        gens = list(self._map(self.d0, self.d0_shift, y0, coeff).cols)
        if r >= 2:
            step = self._add(self.d0_shift, self._scale(self.d1_shift, -1))
            y1 = self._add(key, self._scale(self.d1_shift, -1))
            keys = [self._add(y1, self._scale(step, j)) for j in range(r - 1)]
            cols = [self._dim(k) for k in keys]
            rows = [self._dim(self._add(k, self.d0_shift)) for k in keys]
            blocks = {}
            for j, k in enumerate(keys):
                blocks[(j, j)] = self._map(self.d0, self.d0_shift, k, coeff)
                if j + 1 < len(keys):
                    blocks[(j, j + 1)] = self._map(self.d1, self.d1_shift, keys[j + 1], coeff)
            M = block_matrix(rows, cols, blocks)
            Kb = kernel_basis(M, coeff)
            n1 = cols[0]
            d1 = self._map(self.d1, self.d1_shift, y1, coeff)
            for c in Kb.cols:
                v = {i: a for i, a in c.items() if i < n1}
                if v:
                    gens.append(d1.apply(v, coeff))
        return Matrix.from_columns(n, gens)

    def page_entry(self, key, r: int, coeff: Coefficients,
                   generators: bool = False) -> FGModule:
        Z = self.cycles(key, r, coeff)
        B = self.boundaries(key, r, coeff)
        return homology_subquotient(Z, B, coeff, generators)

    def page(self, r: int, coeff: Coefficients, reduced: bool) -> BigradedGroups:
        groups = {key: self.page_entry(key, r, coeff) for key in self.dims if self.dims[key]}
        return BigradedGroups(groups, reduced, coeff, page=r)


# -- total complex ---------------------------------------------------------------


@dataclass
class TotalHomology:
    groups: dict
    generator: dict
    generator_is_cycle: Optional[bool]
    generator_generates: Optional[bool]

    def table(self) -> dict:
        return {n: g.signature() for n, g in self.groups.items() if not g.is_zero()}


def diagonal_generator(K: Complex) -> dict:
    """``sum_sigma (-1)^[v/2] sigma (x) sigma`` with ``v`` the vertex count of sigma.

    Counting vertices (not dimension) is what makes this a cycle: for an edge
    the coefficient must be -1, and the empty simplex gets +1.
    """
    out = {}
    for sigma in K.all_simplices():
        out[(sigma, sigma)] = -1 if (len(sigma) // 2) % 2 else 1
    return out


def total_homology(K: Complex, coeff: Coefficients, reduced: bool = True) -> TotalHomology:
    """Homology of the total complex of T~(K) (or T(K)) graded by ``t - s``."""
    dc = DoubleComplex(K, reduced)
    by_n: dict = {}
    for (s, t) in dc.keys():
        by_n.setdefault(t - s, []).append((s, t))
    offsets = {}
    for n, keys in by_n.items():
        keys.sort()
        off = 0
        for k in keys:
            offsets[k] = off
            off += dc.dim(k)
    size = {n: sum(dc.dim(k) for k in keys) for n, keys in by_n.items()}

    def total_map(n):
        cols = []
        for k in by_n.get(n, []):
            D = dc.d_map(k).over(coeff)
            Dl = dc.delta_map(k).over(coeff)
            kd, kl = (k[0] - 1, k[1]), (k[0], k[1] + 1)
            for j in range(dc.dim(k)):
                col = {}
                for i, v in D.cols[j].items():
                    col[offsets[kd] + i] = v
                for i, v in Dl.cols[j].items():
                    col[offsets[kl] + i] = col.get(offsets[kl] + i, 0) + v
                cols.append({i: v for i, v in col.items() if v})
        return Matrix(size.get(n + 1, 0), size.get(n, 0), cols)

    groups = {}
    for n in sorted(by_n):
        Z = kernel_basis(total_map(n), coeff)
        B = total_map(n - 1)
        groups[n] = homology_subquotient(Z, B, coeff, generators=False)

    gen: dict = {}
    is_cycle = generates = None
    if reduced:
        for (sigma, eta), c in diagonal_generator(K).items():
            key = (len(sigma) - 1, len(eta) - 1)
            gen[offsets[key] + dc.index[key][(sigma, eta)]] = coeff(c)
        is_cycle = not total_map(0).apply(gen, coeff)
        if is_cycle:
            Z = kernel_basis(total_map(0), coeff)
            zech = Echelon(Z, coeff)
            R = [zech.solve(c) for c in total_map(-1).cols if c]
            w = zech.solve(gen)
            cols = Matrix.from_columns(zech.rank, R + [w])
            inv = invariant_factors(cols, coeff)
            generates = len(inv) == zech.rank and all(d == 1 for d in inv)
        else:
            generates = False
    return TotalHomology(groups, gen, is_cycle, generates)


# -- the complementary double complex U ------------------------------------------


class ComplementDoubleComplex:
    """``U_{s,t}``: pairs ``sigma (x) tau`` with sigma in K (empty allowed),
    tau a subset of the vertex set that is *not* in K, and sigma inside tau."""

    def __init__(self, K: Complex):
        self.K = K
        n = K.nvertices
        nonfaces = [c for k in range(1, n + 1) for c in combinations(range(n), k)
                    if c not in K]
        self.nonfaces = nonfaces
        nf = set(nonfaces)
        basis: dict = {}
        for tau in nonfaces:
            for k in range(0, len(tau)):
                for sigma in combinations(tau, k):
                    if sigma in K:
                        basis.setdefault((k - 1, len(tau) - 1), []).append((sigma, tau))
        self.basis = {key: sorted(b) for key, b in sorted(basis.items())}
        self.index = {key: {p: i for i, p in enumerate(b)} for key, b in self.basis.items()}
        self.D: dict = {}
        self.Delta: dict = {}
        for (s, t), pairs in self.basis.items():
            dst = self.index.get((s - 1, t), {})
            cols = []
            for sigma, tau in pairs:
                col = {}
                if s >= 0:
                    for i in range(len(sigma)):
                        col[dst[(sigma[:i] + sigma[i + 1:], tau)]] = (-1) ** i
                cols.append(col)
            self.D[(s, t)] = Matrix(len(dst), len(pairs), cols)
            dst = self.index.get((s, t + 1), {})
            sgn = -1 if s % 2 else 1
            cols = []
            for sigma, tau in pairs:
                col = {}
                for v in range(n):
                    ins = _insert_sign(v, tau)
                    if ins is None or ins[1] not in nf:
                        continue
                    col[dst[(sigma, ins[1])]] = sgn * ins[0]
                cols.append(col)
            self.Delta[(s, t)] = Matrix(len(dst), len(pairs), cols)

    def dims(self) -> dict:
        return {k: len(b) for k, b in self.basis.items()}
