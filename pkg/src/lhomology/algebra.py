"""Exact linear algebra over the integers, the rationals and prime fields.

Matrices are stored column-wise as lists of ``{row: value}`` dicts with no
zero entries.  Integers are Python ints (arbitrary precision), rationals are
``fractions.Fraction`` and elements of F_p are ints in ``range(p)``.

The central routines are

* :func:`smith_normal_form` -- dense SNF with unimodular transforms,
* :func:`kernel_basis` / :func:`image_basis` -- column echelon reduction,
* :func:`constrained_kernel` -- ``{x : Ax = 0, Bx in im C}``,
* :func:`homology_subquotient` -- the finitely generated module Z/B.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence


class Coefficients:
    """Coefficient ring: ``Z``, ``Q`` or ``F<p>``."""

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int = 0):
        if kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown coefficient kind {kind!r}")
        if kind == "F":
            if not (2 <= p < 2**61) or not _is_prime(p):
                raise ValueError(f"F_p needs a prime 2 <= p < 2**61, got {p}")
        else:
            p = 0
        self.kind = kind
        self.p = p

    @classmethod
    def parse(cls, text: str) -> "Coefficients":
        text = text.strip()
        if text in ("Z", "ZZ"):
            return ZZ
        if text in ("Q", "QQ"):
            return QQ
        if text[:1] == "F" and text[1:].isdigit():
            return cls("F", int(text[1:]))
        raise ValueError(f"cannot parse coefficients {text!r} (use Z, Q or F<p>)")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __call__(self, x):
        if self.kind == "F":
            return int(x) % self.p
        if self.kind == "Q":
            return Fraction(x)
        return int(x)

    def inv(self, x):
        if self.kind == "F":
            return pow(x, -1, self.p)
        if self.kind == "Q":
            return 1 / Fraction(x)
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")

    def is_unit(self, x) -> bool:
        if self.kind == "Z":
            return x == 1 or x == -1
        return x != 0

    def __eq__(self, other):
        return isinstance(other, Coefficients) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    def __repr__(self):
        return f"Coefficients({str(self)!r})"


def _is_prime(n: int) -> bool:
    from sympy import isprime

    return bool(isprime(n))


ZZ = Coefficients("Z")
QQ = Coefficients("Q")


def GF(p: int) -> Coefficients:
    return Coefficients("F", p)


# ---------------------------------------------------------------------------
# sparse matrices


class Matrix:
    """Sparse column-major matrix; ``cols[j]`` maps row index to entry."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Optional[list] = None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [{} for _ in range(ncols)]
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.cols = cols

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence], nrows: Optional[int] = None,
                   ncols: Optional[int] = None) -> "Matrix":
        m = len(rows) if nrows is None else nrows
        n = (len(rows[0]) if rows else 0) if ncols is None else ncols
        cols = [{} for _ in range(n)]
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    cols[j][i] = v
        return cls(m, n, cols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[dict]) -> "Matrix":
        cols = [{r: v for r, v in c.items() if v} for c in columns]
        return cls(nrows, len(cols), cols)

    @classmethod
    def identity(cls, n: int, one=1) -> "Matrix":
        return cls(n, n, [{j: one} for j in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence, nrows: Optional[int] = None) -> "Matrix":
        n = len(values) if nrows is None else nrows
        return cls(n, len(values), [{j: v} if v else {} for j, v in enumerate(values)])

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def over(self, ring: Coefficients) -> "Matrix":
        cols = []
        for col in self.cols:
            c = {}
            for i, v in col.items():
                v = ring(v)
                if v:
                    c[i] = v
            cols.append(c)
        return Matrix(self.nrows, self.ncols, cols)

    def transpose(self) -> "Matrix":
        cols = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                cols[i][j] = v
        return Matrix(self.ncols, self.nrows, cols)

    def column(self, j: int) -> dict:
        return self.cols[j]

    def apply(self, vec: dict, ring: Optional[Coefficients] = None) -> dict:
        """Matrix-vector product with a sparse vector."""
        out: dict = {}
        p = ring.p if ring is not None else 0
        for j, a in vec.items():
            for i, v in self.cols[j].items():
                out[i] = out.get(i, 0) + a * v
        if p:
            return {i: v % p for i, v in out.items() if v % p}
        return {i: v for i, v in out.items() if v}

    def matmul(self, other: "Matrix", ring: Optional[Coefficients] = None) -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix(self.nrows, other.ncols, [self.apply(c, ring) for c in other.cols])

    __matmul__ = matmul

    def is_zero(self) -> bool:
        return not any(self.cols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.shape == other.shape
                and self.cols == other.cols)

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.cols))})"


def hstack(nrows: int, blocks: Sequence[Matrix]) -> Matrix:
    cols = []
    for b in blocks:
        if b.nrows != nrows:
            raise ValueError("row count mismatch in hstack")
        cols.extend(dict(c) for c in b.cols)
    return Matrix(nrows, len(cols), cols)


def block_matrix(row_sizes: Sequence[int], col_sizes: Sequence[int],
                 blocks: dict) -> Matrix:
    """Assemble a sparse matrix from ``{(bi, bj): Matrix}`` blocks."""
    roff = [0]
    for r in row_sizes:
        roff.append(roff[-1] + r)
    cols = []
    for bj, w in enumerate(col_sizes):
        parts = [(roff[bi], m) for (bi, bj2), m in blocks.items() if bj2 == bj]
        for j in range(w):
            c = {}
            for off, m in parts:
                for i, v in m.cols[j].items():
                    c[off + i] = v
            cols.append(c)
    return Matrix(roff[-1], len(cols), cols)


# ---------------------------------------------------------------------------
# column echelon reduction


def _xgcd(a: int, b: int):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) > 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _combine(u: dict, cu, v: dict, cv, p: int) -> dict:
    """Return ``cu*u + cv*v`` as a new sparse vector."""
    out = {}
    if cu:
        for i, a in u.items():
            out[i] = cu * a
    if cv:
        for i, a in v.items():
            out[i] = out.get(i, 0) + cv * a
    if p:
        return {i: a % p for i, a in out.items() if a % p}
    return {i: a for i, a in out.items() if a}


def _axpy(dst: dict, src: dict, f, p: int) -> None:
    """``dst += f * src`` in place."""
    for i, a in src.items():
        b = dst.get(i, 0) + f * a
        if p:
            b %= p
        if b:
            dst[i] = b
        else:
            dst.pop(i, None)


class Echelon:
    """Column echelon form: nonzero columns have pairwise distinct lowest rows.

    ``basis`` holds the nonzero reduced columns (a basis of the column space,
    or of the column lattice over Z); ``kernel`` holds the transform columns
    of the zero columns when tracking was requested.
    """

    def __init__(self, matrix: Matrix, ring: Coefficients, track: bool = False):
        self.ring = ring
        self.nrows = matrix.nrows
        p = ring.p
        cols = [dict(c) for c in matrix.cols]
        V = [{j: 1} for j in range(len(cols))] if track else None
        pivot_of: dict = {}
        for j in range(len(cols)):
            col = cols[j]
            while col:
                r = max(col)
                i = pivot_of.get(r)
                if i is None:
                    pivot_of[r] = j
                    break
                a, b = col[r], cols[i][r]
                if ring.is_field:
                    f = -a * ring.inv(b)
                    _axpy(col, cols[i], f, p)
                    if track:
                        _axpy(V[j], V[i], f, p)
                elif a % b == 0:
                    f = -(a // b)
                    _axpy(col, cols[i], f, 0)
                    if track:
                        _axpy(V[j], V[i], f, 0)
                else:
                    g, x, y = _xgcd(b, a)
                    bi, aj = b // g, a // g
                    ci = cols[i]
                    cols[i] = _combine(ci, x, col, y, 0)
                    col = cols[j] = _combine(col, bi, ci, -aj, 0)
                    if track:
                        vi = V[i]
                        V[i] = _combine(vi, x, V[j], y, 0)
                        V[j] = _combine(V[j], bi, vi, -aj, 0)
        self._cols = cols
        self.pivots = {r: j for r, j in pivot_of.items()}
        self.basis_index = sorted(pivot_of.values())
        self.basis = [cols[j] for j in self.basis_index]
        self.rank = len(self.basis)
        self.kernel = ([V[j] for j in range(len(cols)) if not cols[j]]
                       if track else None)

    def solve(self, vec: dict) -> Optional[dict]:
        """Coefficients ``c`` (keyed by position in ``basis``) with ``sum c_k basis_k == vec``.

        Returns None when ``vec`` is outside the span (over Z: the lattice).
        """
        ring = self.ring
        p = ring.p
        pos = {j: k for k, j in enumerate(self.basis_index)}
        vec = {i: v for i, v in vec.items() if v}
        out: dict = {}
        while vec:
            r = max(vec)
            j = self.pivots.get(r)
            if j is None:
                return None
            a, b = vec[r], self._cols[j][r]
            if ring.is_field:
                f = a * ring.inv(b)
                if p:
                    f %= p
            else:
                if a % b:
                    return None
                f = a // b
            k = pos[j]
            out[k] = out.get(k, 0) + f
            _axpy(vec, self._cols[j], -f, p)
        return out

    def contains(self, vec: dict) -> bool:
        return self.solve(vec) is not None


def kernel_basis(M: Matrix, coeff: Coefficients) -> Matrix:
    """Columns spanning ``{x : Mx = 0}``; over Z a saturated lattice basis."""
    ech = Echelon(M, coeff, track=True)
    return Matrix.from_columns(M.ncols, ech.kernel)


def image_basis(M: Matrix, coeff: Coefficients) -> Matrix:
    ech = Echelon(M, coeff)
    return Matrix.from_columns(M.nrows, ech.basis)


def rank(M: Matrix, coeff: Coefficients) -> int:
    return Echelon(M, coeff).rank


def constrained_kernel(A: Matrix, B: Matrix, C: Matrix, coeff: Coefficients) -> Matrix:
    """Basis of ``{x : Ax = 0 and Bx in im C}``.

    Computed as the projection onto the x-block of ``ker [[A, 0], [B, -C]]``.
    """
    n = A.ncols
    if B.ncols != n or B.nrows != C.nrows:
        raise ValueError(f"incompatible shapes A{A.shape} B{B.shape} C{C.shape}")
    negC = Matrix(C.nrows, C.ncols, [{i: -v for i, v in c.items()} for c in C.cols])
    if coeff.p:
        negC = negC.over(coeff)
    M = block_matrix([A.nrows, B.nrows], [n, C.ncols],
                     {(0, 0): A, (1, 0): B, (1, 1): negC})
    K = kernel_basis(M, coeff)
    proj = [{i: v for i, v in c.items() if i < n} for c in K.cols]
    return image_basis(Matrix.from_columns(n, proj), coeff)


# ---------------------------------------------------------------------------
# Smith normal form


def _dense_snf(A: list, nrows: int, ncols: int, ring: Coefficients, track: bool):
    """In-place SNF of a dense list-of-lists matrix.

    Returns ``(diag, U, Uinv, V)`` with ``U A V = D``; transforms are None when
    ``track`` is false.  Pivots are chosen by smallest magnitude.
    """
    p = ring.p
    field = ring.is_field
    m, n = nrows, ncols
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    Ui = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if track else None

    def red(x):
        return x % p if p else x

    def row_add(dst, src, f):  # R_dst += f R_src
        Ad, As = A[dst], A[src]
        for j in range(n):
            if As[j]:
                Ad[j] = red(Ad[j] + f * As[j])
        if track:
            Ud, Us = U[dst], U[src]
            for j in range(m):
                if Us[j]:
                    Ud[j] = red(Ud[j] + f * Us[j])
            for row in Ui:  # C_src -= f C_dst
                if row[dst]:
                    row[src] = red(row[src] - f * row[dst])

    def col_add(dst, src, f):  # C_dst += f C_src
        for row in A:
            if row[src]:
                row[dst] = red(row[dst] + f * row[src])
        if track:
            for row in V:
                if row[src]:
                    row[dst] = red(row[dst] + f * row[src])

    def row_swap(a, b):
        A[a], A[b] = A[b], A[a]
        if track:
            U[a], U[b] = U[b], U[a]
            for row in Ui:
                row[a], row[b] = row[b], row[a]

    def col_swap(a, b):
        for row in A:
            row[a], row[b] = row[b], row[a]
        if track:
            for row in V:
                row[a], row[b] = row[b], row[a]

    def row_scale(a, c):  # c must be a unit
        A[a] = [red(c * x) for x in A[a]]
        if track:
            U[a] = [red(c * x) for x in U[a]]
            ci = ring.inv(c)
            for row in Ui:
                row[a] = red(row[a] * ci)

    def size(x):
        return abs(x) if not field else (0 if x == 0 else 1)

    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or size(x) < best[0]):
                    best = (size(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        row_swap(t, i)
        col_swap(t, j)
        while True:
            piv = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    q = x * ring.inv(piv) if field else x // piv
                    row_add(i, t, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                x = A[t][j]
                if x:
                    q = x * ring.inv(piv) if field else x // piv
                    col_add(j, t, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                best = None
                for i in range(t + 1, m):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, None)
                for j in range(t + 1, n):
                    if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                        best = (abs(A[t][j]), None, j)
                if best is not None and best[0] < abs(A[t][t]):
                    if best[1] is not None:
                        row_swap(t, best[1])
                    else:
                        col_swap(t, best[2])
                continue
            if not field:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is not None:
                    row_add(t, bad, 1)
                    continue
            break
        piv = A[t][t]
        if field and piv != 1:
            row_scale(t, ring.inv(piv))
        elif not field and piv < 0:
            row_scale(t, -1)
        diag.append(A[t][t])
        t += 1
    return diag, U, Ui, V


def smith_normal_form(M):
    """Smith normal form of an integer matrix.

    ``M`` may be a :class:`Matrix` or a dense list of rows.  Returns
    ``(factors, U, V)`` where ``factors`` are the nonzero invariant factors
    ``d1 | d2 | ...`` and ``U @ M @ V`` is ``diag(factors)`` padded with zeros;
    ``U`` and ``V`` are unimodular :class:`Matrix` objects.
    """
    if isinstance(M, Matrix):
        m, n, dense = M.nrows, M.ncols, M.to_dense()
    else:
        dense = [list(map(int, r)) for r in M]
        m = len(dense)
        n = len(dense[0]) if dense else 0
    diag, U, _, V = _dense_snf(dense, m, n, ZZ, track=True)
    return tuple(diag), Matrix.from_dense(U, m, m), Matrix.from_dense(V, n, n)


def invariant_factors(M: Matrix, coeff: Coefficients = ZZ) -> list:
    """Nonzero invariant factors of ``M`` (all 1 over a field).

    Sparse unit-pivot elimination first; the residual core goes to dense SNF.
    """
    p = coeff.p
    cols = {j: dict(c) for j, c in enumerate(M.cols) if c}
    rows: dict = {}
    for j, c in cols.items():
        for i in c:
            rows.setdefault(i, set()).add(j)
    factors = []
    progress = True
    while progress and cols:
        progress = False
        for j in list(cols):
            c = cols.get(j)
            if c is None:
                continue
            if not c:
                del cols[j]
                continue
            best = None
            for i, v in c.items():
                if coeff.is_unit(v):
                    cnt = len(rows[i])
                    if best is None or cnt < best[0]:
                        best = (cnt, i)
                        if cnt == 1:
                            break
            if best is None:
                continue
            r = best[1]
            u_inv = coeff.inv(c[r])
            for k in list(rows[r]):
                if k == j:
                    continue
                ck = cols[k]
                f = -ck[r] * u_inv
                if p:
                    f %= p
                for i, v in c.items():
                    old = ck.get(i, 0)
                    nv = old + f * v
                    if p:
                        nv %= p
                    if nv:
                        if not old:
                            rows[i].add(k)
                        ck[i] = nv
                    elif old:
                        del ck[i]
                        rows[i].discard(k)
                if not ck:
                    del cols[k]
            for i in c:
                rows[i].discard(j)
            del cols[j]
            del rows[r]
            factors.append(1)
            progress = True
    live = [c for c in cols.values() if c]
    if live:
        row_ids = sorted({i for c in live for i in c})
        pos = {i: k for k, i in enumerate(row_ids)}
        dense = [[0] * len(live) for _ in row_ids]
        for j, c in enumerate(live):
            for i, v in c.items():
                dense[pos[i]][j] = v
        diag, *_ = _dense_snf(dense, len(row_ids), len(live), coeff, track=False)
        factors.extend(diag)
    if coeff.is_field:
        return [1] * len(factors)
    return sorted(abs(d) for d in factors)


# ---------------------------------------------------------------------------
# finitely generated modules


class FGModule:
    """Finitely generated module ``Z^rank + sum Z/d_i`` (a vector space over a field).

    ``generators`` (optional) are representative sparse vectors in the ambient
    basis, ordered torsion first (matching ``torsion``) then free.
    ``coordinates(v)`` expresses an element of the cycle lattice in terms of
    the generators; torsion coordinates are reduced modulo their order.
    """

    __slots__ = ("rank", "torsion", "generators", "orders", "_coords")

    def __init__(self, rank: int = 0, torsion: Sequence[int] = (),
                 generators: Optional[list] = None,
                 coords: Optional[Callable] = None):
        torsion = tuple(int(d) for d in torsion)
        if any(d <= 1 for d in torsion):
            raise ValueError("torsion coefficients must exceed 1")
        if any(torsion[k + 1] % torsion[k] for k in range(len(torsion) - 1)):
            raise ValueError(f"torsion {torsion} is not a divisibility chain")
        self.rank = int(rank)
        self.torsion = torsion
        self.generators = generators
        self.orders = torsion + (0,) * self.rank
        self._coords = coords

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FGModule":
        """Normal form of ``sum Z/d`` for arbitrary orders (0 meaning Z)."""
        orders = list(orders)
        free = sum(1 for d in orders if d == 0)
        finite = [d for d in orders if d not in (0, 1)]
        if not finite:
            return cls(free)
        inv = invariant_factors(Matrix.diagonal(finite), ZZ)
        return cls(free, [d for d in inv if d != 1])

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def signature(self):
        return (self.rank, self.torsion)

    def coordinates(self, vec: dict) -> list:
        if self._coords is None:
            raise ValueError("module was computed without generator data")
        return self._coords(vec)

    def __eq__(self, other):
        if isinstance(other, FGModule):
            return self.signature() == other.signature()
        return NotImplemented

    def __hash__(self):
        return hash(self.signature())

    def __add__(self, other: "FGModule") -> "FGModule":
        return FGModule.from_orders(self.orders + other.orders)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"FGModule(rank={self.rank}, torsion={self.torsion})"


def homology_subquotient(Z: Matrix, Bnd: Matrix, coeff: Coefficients,
                         generators: bool = True) -> FGModule:
    """The module (column span of Z) / (column span of Bnd).

    Columns of ``Z`` need only generate; ``Bnd`` must lie inside.  With
    ``generators`` the result carries representatives in Z's ambient basis
    and a coordinate map.
    """
    if Z.nrows != Bnd.nrows:
        raise ValueError("Z and Bnd live in different ambient spaces")
    zech = Echelon(Z, coeff)
    k = zech.rank
    coord_cols = []
    for c in Bnd.cols:
        if not c:
            continue
        s = zech.solve(c)
        if s is None:
            raise ValueError("boundary column is not contained in the cycle span")
        coord_cols.append(s)
    R = Matrix.from_columns(k, coord_cols)
    if not generators:
        inv = invariant_factors(R, coeff)
        return FGModule(k - len(inv), [d for d in inv if d != 1])

    p = coeff.p
    dense = R.to_dense()
    diag, U, Ui, _ = _dense_snf(dense, k, R.ncols, coeff, track=True)
    if not coeff.is_field:
        diag = [abs(d) for d in diag]
    keep = [(i, d) for i, d in enumerate(diag) if d != 1] + [(i, 0) for i in range(len(diag), k)]
    basis = zech.basis
    gens = []
    for i, _ in keep:
        v: dict = {}
        for a in range(k):
            c = Ui[a][i]
            if c:
                _axpy(v, basis[a], c, p)
        gens.append(v)
    keep_rows = [(U[i], d) for i, d in keep]

    def coords(vec: dict) -> list:
        w = zech.solve(vec)
        if w is None:
            raise ValueError("vector is not a cycle")
        out = []
        for row, d in keep_rows:
            x = sum(row[a] * c for a, c in w.items())
            if p:
                x %= p
            elif d:
                x %= d
            out.append(x)
        return out

    torsion = [d for _, d in keep if d]
    return FGModule(k - len(diag), torsion, gens, coords)
