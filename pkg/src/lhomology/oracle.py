"""Naive ground truth: dense matrices, separate lattice routines, and the fuzzer.

Nothing here reuses the sparse algebra or the double-complex builder of the
main path; the only shared object is :class:`~lhomology.complex.Complex`.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .algebra import Coefficients, FGModule
from .bigraded import BigradedGroups
from .complex import Complex, stellar_subdivision


# -- dense double complex -------------------------------------------------------


def _parity(seq) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def dense_double_complex(K: Complex, reduced: bool):
    """Blocks ``{(s, t): [pairs]}`` and dense maps ``D``, ``L`` (lists of rows)."""
    simplices = set(K.all_simplices())
    blocks: dict = {}
    for eta in sorted(simplices, key=lambda e: (len(e), e)):
        if not eta and not reduced:
            continue
        for mask in range(1 << len(eta)):
            sigma = tuple(v for b, v in enumerate(eta) if mask >> b & 1)
            if not sigma and not reduced:
                continue
            blocks.setdefault((len(sigma) - 1, len(eta) - 1), []).append((sigma, eta))
    for key in blocks:
        blocks[key].sort()
    pos = {key: {p: i for i, p in enumerate(b)} for key, b in blocks.items()}

    def zeros(r, c):
        return [[0] * c for _ in range(r)]

    D, L = {}, {}
    for (s, t), pairs in blocks.items():
        lo = blocks.get((s - 1, t), [])
        M = zeros(len(lo), len(pairs))
        if s >= 1 or (s == 0 and reduced):
            for j, (sigma, eta) in enumerate(pairs):
                for i in range(len(sigma)):
                    face = sigma[:i] + sigma[i + 1:]
                    M[pos[(s - 1, t)][(face, eta)]][j] += (-1) ** i
        D[(s, t)] = M
        up = blocks.get((s, t + 1), [])
        M = zeros(len(up), len(pairs))
        for j, (sigma, eta) in enumerate(pairs):
            for v in range(K.nvertices):
                chain = (v,) + eta
                if v in eta:
                    continue
                target = tuple(sorted(chain))
                if target not in simplices:
                    continue
                M[pos[(s, t + 1)][(sigma, target)]][j] += (-1) ** (s % 2) * _parity(chain)
        L[(s, t)] = M
    return blocks, D, L


# -- dense exact linear algebra --------------------------------------------------


def _rank_mod_p(rows, p: int) -> int:
    A = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = pow(A[rank][c], p - 2, p)
        A[rank] = [x * inv % p for x in A[rank]]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                f = A[i][c]
                A[i] = [(x - f * y) % p for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def _rank_q(rows) -> int:
    """Fraction-free (Bareiss) elimination over the integers."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    rank, prev = 0, 1
    for c in range(len(A[0])):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for i in range(rank + 1, len(A)):
            f = A[i][c]
            A[i] = [(p * x - f * y) // prev for x, y in zip(A[i], A[rank])]
        prev = p
        rank += 1
    return rank


def dense_rank(rows, coeff: Coefficients) -> int:
    if not rows or not rows[0]:
        return 0
    if coeff.kind == "F":
        return _rank_mod_p(rows, coeff.p)
    return _rank_q(rows)


def _hnf_rows(rows):
    """Integer row echelon form by gcd row operations; returns nonzero rows."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return []
    ncols = len(A[0])
    out = []
    for c in range(ncols):
        live = [r for r in A if r[c]]
        rest = [r for r in A if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            head = live[0]
            nxt = [head]
            for r in live[1:]:
                q = r[c] // head[c]
                r = [x - q * y for x, y in zip(r, head)]
                (nxt if r[c] else rest).append(r)
            live = nxt
        if live:
            out.append(live[0])
        A = [r for r in rest if any(r)]
    return out


def int_kernel(rows, ncols: int):
    """Saturated integer kernel basis (as vectors) of a dense matrix."""
    m = len(rows)
    aug = []
    for j in range(ncols):
        aug.append([rows[i][j] for i in range(m)] + [int(k == j) for k in range(ncols)])
    ech = _hnf_rows_full(aug, m)
    return [r[m:] for r in ech if not any(r[:m])]


def _hnf_rows_full(rows, key_cols: int):
    """Row echelon on the first ``key_cols`` columns, keeping zero-key rows."""
    A = [list(r) for r in rows]
    done = []
    for c in range(key_cols):
        live = [r for r in A if r[c]]
        rest = [r for r in A if not r[c]]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[c]))
            head = live[0]
            nxt = [head]
            for r in live[1:]:
                q = r[c] // head[c]
                r = [x - q * y for x, y in zip(r, head)]
                (nxt if r[c] else rest).append(r)
            live = nxt
        done.extend(live)
        A = rest
    return done + A


def int_invariants(rows) -> list:
    """Nonzero invariant factors by alternating row and column HNF, then gcd/lcm."""
    from math import gcd

    A = [list(r) for r in rows if any(r)]
    while True:
        A = _hnf_rows(A)
        if not A:
            return []
        T = [list(c) for c in zip(*A)]
        T = _hnf_rows(T)
        A = [list(c) for c in zip(*T)]
        if all(A[i][j] == 0 for i in range(len(A)) for j in range(len(A[0])) if i != j):
            break
    diag = [abs(A[i][i]) for i in range(min(len(A), len(A[0]))) if A[i][i]]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag)):
            for j in range(i + 1, len(diag)):
                a, b = diag[i], diag[j]
                if b % a:
                    g = gcd(a, b)
                    diag[i], diag[j] = g, a * b // g
                    changed = True
    return sorted(diag)


def _matvec(M, x):
    return [sum(a * b for a, b in zip(row, x)) for row in M]


def _columns(M, ncols):
    return [[row[j] for row in M] for j in range(ncols)]


def _lattice_quotient(Z_gens, B_gens, n: int) -> FGModule:
    basis = _hnf_rows(Z_gens)
    coords = []
    for b in B_gens:
        b = list(b)
        c = []
        for r in basis:
            p = next(k for k, x in enumerate(r) if x)
            q, rem = divmod(b[p], r[p])
            if rem:
                raise ArithmeticError("boundary not in cycle lattice")
            c.append(q)
            b = [x - q * y for x, y in zip(b, r)]
        if any(b):
            raise ArithmeticError("boundary not in cycle lattice")
        coords.append(c)
    k = len(basis)
    if not coords or k == 0:
        return FGModule(k)
    inv = int_invariants([list(r) for r in zip(*coords)])
    return FGModule(k - len(inv), [d for d in inv if d > 1])


# -- E^1 and E^2 oracles ----------------------------------------------------------


def e1_direct(K: Complex, coeff: Coefficients, reduced: bool = True) -> BigradedGroups:
    """Column-wise Delta-cohomology of the raw double complex."""
    blocks, D, L = dense_double_complex(K, reduced)
    groups = {}
    for (s, t), pairs in blocks.items():
        n = len(pairs)
        out = L[(s, t)]
        inc = L.get((s, t - 1))
        if coeff.is_field:
            dim = n - dense_rank(out, coeff) - (dense_rank(inc, coeff) if inc else 0)
            groups[(s, t)] = FGModule(dim)
        else:
            r_out = dense_rank(out, coeff)
            inv = int_invariants(inc) if inc else []
            groups[(s, t)] = FGModule(n - r_out - len(inv), [d for d in inv if d > 1])
    return BigradedGroups(groups, reduced, coeff, page=1)


def _stack(top, bottom, ncols):
    return [list(r) for r in top] + [list(r) for r in bottom] if (top or bottom) else []


def _hcat(A, B, nrows):
    if nrows == 0:
        return []
    A = A or [[] for _ in range(nrows)]
    B = B or [[] for _ in range(nrows)]
    return [list(a) + list(b) for a, b in zip(A, B)]


def _zeros(r, c):
    return [[0] * c for _ in range(r)]


def e2_direct(K: Complex, coeff: Coefficients, reduced: bool = True) -> BigradedGroups:
    """``Z2 / B2`` on the raw double complex with dense exact arithmetic.

    ``Z2 = {x : Delta x = 0, D x in im Delta}``,
    ``B2 = im Delta + D(ker Delta)``.
    """
    blocks, D, L = dense_double_complex(K, reduced)

    def size(k):
        return len(blocks.get(k, ()))

    def get(maps, k, tgt):
        return maps.get(k) or _zeros(size(tgt), size(k))

    groups = {}
    for (s, t) in blocks:
        nx = size((s, t))
        y = (s - 1, t - 1)
        ny = size(y)
        Lx = get(L, (s, t), (s, t + 1))
        Dx = get(D, (s, t), (s - 1, t))
        Ly = get(L, y, (s - 1, t))
        top = _hcat(Lx, _zeros(len(Lx), ny), len(Lx))
        bot = _hcat(Dx, [[-v for v in r] for r in Ly], len(Dx))
        M = top + bot
        w = (s + 1, t)
        nw = size(w)
        Lw = get(L, w, (s + 1, t + 1))
        Dw = get(D, w, (s, t))
        u = (s, t - 1)
        nu = size(u)
        Lu = get(L, u, (s, t))
        if coeff.is_field:
            rM = dense_rank(M, coeff) if M else 0
            rLy = dense_rank(Ly, coeff) if Ly else 0
            dimZ = (nx + ny - rM) - (ny - rLy)
            N = _hcat(Lu, Dw, nx) + _hcat(_zeros(len(Lw), nu), Lw, len(Lw))
            rN = dense_rank(N, coeff) if N else 0
            rLw = dense_rank(Lw, coeff) if Lw else 0
            groups[(s, t)] = FGModule(dimZ - (rN - rLw))
            continue
        if M:
            ker = int_kernel(M, nx + ny)
        else:
            ker = [[int(i == j) for i in range(nx + ny)] for j in range(nx + ny)]
        Z = [v[:nx] for v in ker]
        B = _columns(Lu, nu) if nu else []
        if nw:
            if Lw:
                kw = int_kernel(Lw, nw)
            else:
                kw = [[int(i == j) for i in range(nw)] for j in range(nw)]
            B += [_matvec(Dw, v) for v in kw]
        groups[(s, t)] = _lattice_quotient(Z, [b for b in B if any(b)], nx)
    return BigradedGroups(groups, reduced, coeff, page=2)


# -- random complexes and the invariance fuzzer -------------------------------------


def random_complex(rng: random.Random, max_vertices: int = 8, max_dim: int = 3):
    """Erdős–Rényi style: each (d+1)-subset kept with probability p, then closed.

    Returns the complex and a JSON-friendly descriptor of the draw.
    """
    n = rng.randint(1, max_vertices)
    d = rng.randint(0, min(max_dim, n - 1))
    p = round(rng.uniform(0.15, 0.55), 3)
    names = [f"v{i}" for i in range(n)]
    facets = [c for c in combinations(range(n), d + 1) if rng.random() < p]
    K = Complex(names, facets)
    desc = {"n": n, "dim": d, "p": p,
            "facets": [[names[v] for v in s] for s in K.maximal_simplices() if s]}
    return K, desc


@dataclass
class TrialRecord:
    index: int
    complex: dict
    trace: list
    checks: dict
    witness: Optional[dict] = None


@dataclass
class FuzzReport:
    seed: int
    trials: int
    max_vertices: int
    max_dim: int
    records: list = field(default_factory=list)
    r_witness: Optional[dict] = None

    @property
    def failures(self) -> list:
        return [r for r in self.records if not all(r.checks.values())]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def fuzz_invariance(seed: int = 42, trials: int = 200, max_vertices: int = 8,
                    max_dim: int = 3, coefficients=None, oracle: bool = False,
                    r_control: bool = True, r_max_vertices: int = 6) -> FuzzReport:
    """Compare L-homology of random K and a random stellar subdivision of K.

    Each trial uses its own generator seeded from ``(seed, index)`` so trials
    are independent and replayable.  Also searches for a pair with different
    R-homology (recorded once as ``r_witness``).
    """
    from .algebra import GF, ZZ
    from .lhom import l_homology, r_homology

    coefficients = coefficients or (ZZ, GF(2))
    report = FuzzReport(seed, trials, max_vertices, max_dim)
    for i in range(trials):
        rng = random.Random(f"{seed}:{i}")
        K, desc = random_complex(rng, max_vertices, max_dim)
        simplices = [s for s in K.all_simplices() if s]
        sigma = simplices[rng.randrange(len(simplices))]
        L = stellar_subdivision(K, sigma)
        checks = {}
        witness = None
        for coeff in coefficients:
            for reduced in (True, False):
                a = l_homology(K, coeff, reduced)
                b = l_homology(L, coeff, reduced)
                name = f"{'LH~' if reduced else 'LH'} {coeff}"
                checks[name] = a == b
                if a != b and witness is None:
                    witness = {"check": name, "K": _table_json(a), "S(K)": _table_json(b)}
                if oracle:
                    checks[f"oracle {name}"] = a == e2_direct(K, coeff, reduced)
        trace = [K.names[v] for v in sigma]
        if r_control and report.r_witness is None and K.nvertices <= r_max_vertices:
            ra = r_homology(K, GF(2))
            rb = r_homology(L, GF(2))
            if ra != rb:
                report.r_witness = {"trial": i, "complex": desc, "simplex": trace,
                                    "R(K)": _table_json(ra), "R(S(K))": _table_json(rb)}
        report.records.append(TrialRecord(i, desc, trace, checks, witness))
    return report


def _table_json(groups: BigradedGroups) -> list:
    return [{"s": s, "t": t, "rank": r, "torsion": list(tor)}
            for (s, t), (r, tor) in groups.table().items()]
