"""Exact sparse linear algebra over Q.

Matrices are stored column-major: a list of ``{row: value}`` dicts, one per
column.  Differentials are built column by column from images of basis
vectors, so this is the natural layout.  Values are ``int`` or ``Fraction``.

Vectors are plain ``{index: value}`` dicts with no zero entries.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd, lcm


class RationalMatrix:
    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows, ncols, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        if cols is None:
            cols = [{} for _ in range(ncols)]
        if len(cols) != ncols:
            raise ValueError("column count mismatch")
        self.cols = cols

    @classmethod
    def from_dense(cls, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for c, v in enumerate(row):
                if v:
                    cols[c][r] = v
        return cls(nrows, ncols, cols)

    @classmethod
    def from_columns(cls, nrows, columns):
        return cls(nrows, len(columns), [dict(c) for c in columns])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [{i: 1} for i in range(n)])

    def copy(self):
        return RationalMatrix(self.nrows, self.ncols, [dict(c) for c in self.cols])

    def __repr__(self):
        return f"RationalMatrix({self.nrows}x{self.ncols}, nnz={self.nnz})"

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def nnz(self):
        return sum(len(c) for c in self.cols)

    def __getitem__(self, rc):
        r, c = rc
        return self.cols[c].get(r, 0)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def rows(self):
        out = [{} for _ in range(self.nrows)]
        for c, col in enumerate(self.cols):
            for r, v in col.items():
                out[r][c] = v
        return out

    def transpose(self):
        return RationalMatrix(self.ncols, self.nrows, self.rows())

    T = property(transpose)

    def apply(self, vec):
        out = {}
        for c, a in vec.items():
            for r, v in self.cols[c].items():
                out[r] = out.get(r, 0) + a * v
        return {r: v for r, v in out.items() if v}

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return RationalMatrix(self.nrows, other.ncols, [self.apply(c) for c in other.cols])

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix(self.nrows, self.ncols,
                              [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if s == 0:
            return RationalMatrix(self.nrows, self.ncols)
        return RationalMatrix(self.nrows, self.ncols,
                              [{r: s * v for r, v in c.items()} for c in self.cols])

    def is_zero(self):
        return all(not c for c in self.cols)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.cols, other.cols))

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("row mismatch")
        return RationalMatrix(self.nrows, self.ncols + other.ncols,
                              [dict(c) for c in self.cols] + [dict(c) for c in other.cols])

    def trace(self):
        return sum(self.cols[i].get(i, 0) for i in range(min(self.nrows, self.ncols)))


def vec_add(a, b, s=1):
    """a + s*b as a new sparse vector."""
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + s * v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def vec_iadd(a, b, s=1):
    for k, v in b.items():
        w = a.get(k, 0) + s * v
        if w:
            a[k] = w
        else:
            a.pop(k, None)
    return a


# ---------------------------------------------------------------- rank

def _integer_rows(rows):
    out = []
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        if not row:
            continue
        den = 1
        for v in row.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
        if den != 1:
            row = {c: int(v * den) for c, v in row.items()}
        else:
            row = {c: int(v) for c, v in row.items()}
        out.append(row)
    return out


def _integer_rank(rows):
    """Fraction-free sparse elimination.  Rows are consumed."""
    active = dict(enumerate(rows))
    colmap = {}
    for i, row in active.items():
        for c in row:
            colmap.setdefault(c, set()).add(i)
    heap = [(len(r), i) for i, r in active.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        ln, i = heapq.heappop(heap)
        row = active.get(i)
        if row is None:
            continue
        if len(row) != ln:
            heapq.heappush(heap, (len(row), i))
            continue
        del active[i]
        for c in row:
            colmap[c].discard(i)
        # prefer unit pivots, then the sparsest column
        c = min(row, key=lambda k: (abs(row[k]) != 1, len(colmap[k]), k))
        p = row[c]
        for j in list(colmap[c]):
            rj = active[j]
            b = rj[c]
            g = gcd(p, b)
            a1, b1 = p // g, b // g
            if a1 < 0:
                a1, b1 = -a1, -b1
            if a1 != 1:
                for k in rj:
                    rj[k] *= a1
            for k, v in row.items():
                w = rj.get(k, 0) - b1 * v
                if w:
                    if k not in rj:
                        colmap[k].add(j)
                    rj[k] = w
                elif k in rj:
                    del rj[k]
                    colmap[k].discard(j)
            if not rj:
                del active[j]
                continue
            if a1 != 1:
                g = 0
                for v in rj.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    for k in rj:
                        rj[k] //= g
            heapq.heappush(heap, (len(rj), j))
        rank += 1
    return rank


def rank(M, prepass=False):
    """Exact rank.  With ``prepass`` a mod-p rank is computed first and checked
    to be a lower bound; the exact value is what is returned."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    lower = rank_mod_p(M) if prepass else None
    # eliminate along the shorter side
    rows = M.rows() if M.nrows <= M.ncols else [dict(c) for c in M.cols]
    r = _integer_rank(_integer_rows(rows))
    if lower is not None and lower > r:
        raise ArithmeticError("modular rank exceeds exact rank")
    return r


def rank_mod_p(M, p=2147483629):
    """Rank over F_p via dense numpy elimination.  Only a lower bound for the
    rational rank (equal for all but finitely many p)."""
    import numpy as np

    n, m = M.nrows, M.ncols
    if n == 0 or m == 0:
        return 0
    A = np.zeros((n, m), dtype=np.int64)
    for c, col in enumerate(M.cols):
        for r, v in col.items():
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    raise ZeroDivisionError("denominator divisible by p")
                A[r, c] = (v.numerator % p) * pow(v.denominator, -1, p) % p
            else:
                A[r, c] = v % p
    rk = 0
    for c in range(m):
        if rk == n:
            break
        nz = np.nonzero(A[rk:, c])[0]
        if nz.size == 0:
            continue
        piv = rk + nz[0]
        if piv != rk:
            A[[rk, piv]] = A[[piv, rk]]
        inv = pow(int(A[rk, c]), -1, p)
        A[rk] = (A[rk] * inv) % p
        below = np.nonzero(A[rk + 1:, c])[0] + rk + 1
        if below.size:
            f = A[below, c].reshape(-1, 1)
            A[below] = (A[below] - (f * A[rk]) % p) % p
        rk += 1
    return rk


# ------------------------------------------------------- echelon spaces

class EchelonSpace:
    """Incrementally built subspace in reduced row echelon form.

    Each stored row has a 1 at its pivot and 0 at every other pivot, so a
    vector ``y`` in the span equals ``sum(y[p] * row_p)``.  Optional tags
    record every row as a combination of tagged inserted vectors.
    """

    def __init__(self, dim=None):
        self.dim = dim
        self.rows = {}
        self.tags = {}
        self.occ = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self):
        return sorted(self.rows)

    def reduce(self, vec, tag=None):
        v = {k: val for k, val in vec.items() if val}
        t = dict(tag) if tag else {}
        for p in [k for k in v if k in self.rows]:
            a = v.get(p)
            if not a:
                continue
            vec_iadd(v, self.rows[p], -a)
            tp = self.tags.get(p)
            if tp:
                vec_iadd(t, tp, -a)
        return v, t

    def insert(self, vec, tag=None):
        v, t = self.reduce(vec, tag)
        if not v:
            return False
        p = min(v, key=lambda k: (len(self.occ.get(k, ())), k))
        a = v[p]
        if a != 1:
            inv = Fraction(1, 1) / a
            v = {k: val * inv for k, val in v.items()}
            t = {k: val * inv for k, val in t.items()}
        for q in list(self.occ.get(p, ())):
            row = self.rows[q]
            b = row[p]
            for k, val in v.items():
                w = row.get(k, 0) - b * val
                if w:
                    if k not in row:
                        self.occ.setdefault(k, set()).add(q)
                    row[k] = w
                else:
                    row.pop(k, None)
                    self.occ[k].discard(q)
            if t or self.tags.get(q):
                tq = self.tags.setdefault(q, {})
                vec_iadd(tq, t, -b)
        self.occ.pop(p, None)
        self.rows[p] = v
        for k in v:
            if k != p:
                self.occ.setdefault(k, set()).add(p)
        if t:
            self.tags[p] = t
        return True

    def contains(self, vec):
        return not self.reduce(vec)[0]

    def coordinates(self, vec):
        """Tag coordinates of a vector lying in the span."""
        out = {}
        for p, a in vec.items():
            if p in self.rows:
                tp = self.tags.get(p)
                if tp:
                    vec_iadd(out, tp, a)
        return out


def rref_rows(M):
    """EchelonSpace spanned by the rows of M."""
    E = EchelonSpace(M.ncols)
    for row in M.rows():
        if row:
            E.insert(row)
    return E


def kernel_basis(M):
    """Basis of ker M.  Vector i has a 1 at ``free[i]`` and 0 at the other
    free columns, so coordinates along the basis are read off there."""
    E = rref_rows(M)
    free = [c for c in range(M.ncols) if c not in E.rows]
    basis = []
    for f in free:
        v = {f: 1}
        for p in E.occ.get(f, ()):
            v[p] = -E.rows[p][f]
        basis.append(v)
    return basis, free


def column_space(M):
    E = EchelonSpace(M.nrows)
    for c in M.cols:
        if c:
            E.insert(c)
    return E


def solve(A, b):
    """Some x with A x = b, or None."""
    E = EchelonSpace(A.nrows)
    for j, c in enumerate(A.cols):
        if c:
            E.insert(c, {j: 1})
    res, _ = E.reduce(b)
    if res:
        return None
    return E.coordinates(b)


class SubquotientBasis:
    """ker(d_out) / im(d_in) with chosen cycle representatives."""

    def __init__(self, ambient_dim, reps, space, boundary_rank):
        self.ambient_dim = ambient_dim
        self.reps = reps
        self.space = space
        self.boundary_rank = boundary_rank

    @property
    def dim(self):
        return len(self.reps)

    def coordinates(self, cycle):
        """Class of a cycle in the basis of representatives."""
        res, _ = self.space.reduce(cycle)
        if res:
            raise ValueError("vector is not a cycle")
        c = self.space.coordinates(cycle)
        return [c.get(i, 0) for i in range(self.dim)]

    def is_boundary(self, cycle):
        return not any(self.coordinates(cycle))


def homology(d_in, d_out, ambient_dim=None):
    """Homology at the middle of  . --d_in--> C --d_out--> . ; either map may be None."""
    n = ambient_dim
    if n is None:
        n = d_in.nrows if d_in is not None else d_out.ncols
    E = EchelonSpace(n)
    brank = 0
    if d_in is not None:
        for c in d_in.cols:
            if c and E.insert(c):
                brank += 1
    if d_out is not None:
        cycles, _ = kernel_basis(d_out)
    else:
        cycles = [{i: 1} for i in range(n)]
    reps = []
    for z in cycles:
        if E.insert(z, {len(reps): 1}):
            reps.append(z)
    return SubquotientBasis(n, reps, E, brank)


def induced_action_on_homology(H, g):
    """Matrix of a chain map (given on the ambient space) on H."""
    cols = []
    for z in H.reps:
        y = g.apply(z) if isinstance(g, RationalMatrix) else g(z)
        cols.append({i: v for i, v in enumerate(H.coordinates(y)) if v})
    return RationalMatrix(H.dim, H.dim, cols)


def trace_on_homology(H, g):
    t = 0
    for i, z in enumerate(H.reps):
        y = g.apply(z) if isinstance(g, RationalMatrix) else g(z)
        t += H.coordinates(y)[i]
    return t
