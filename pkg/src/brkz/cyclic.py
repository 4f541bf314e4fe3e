"""Cyclic operads and their symmetric / exterior Day powers.

Two families are built in: an algebra with involution (B, sigma), seen as
a cyclic operad concentrated in arity 2, and the positive-degree commutative
operad Com_{>=3} (trivial one-dimensional in every arity >= 3).

A cyclic operad here exposes a *monomial* S_n-action on C(n) (signed
permutations of a basis) and the normalised composite

    C(m) (x) C(n) -> C(m + n - 2),

gluing the last input of the first factor to the first input of the second.
The output order is: first factor's remaining inputs, then the second's.

S.(C) and L.(C) (sum over d of the symmetric / exterior Day powers) are
realised by ``OdotModule``: basis = set partitions of 1..N into blocks sorted
by minimum, each block carrying a C-label relative to its sorted order.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .exactla import EchelonSpace, vec_iadd
from .symrep import MM, PP, WreathElement, compose, inverse, reduced_word


class OperadError(ValueError):
    pass


class CyclicOperad:
    name = "operad"
    max_arity = None

    def dim(self, n):
        raise NotImplementedError

    def gen_action(self, n, j):
        """s_j on C(n): (targets, signs) with s_j e_a = signs[a] e_targets[a]."""
        raise NotImplementedError

    def comp(self, m, a, n, b):
        raise NotImplementedError

    def labels(self, n):
        return [str(i) for i in range(self.dim(n))]

    def perm_action(self, n, perm):
        return _perm_action(self, n, tuple(perm))

    def act(self, n, perm, a):
        t, s = self.perm_action(n, perm)
        return t[a], s[a]

    def comp_sets(self, U, x, p, W, y, q):
        """x o_{p,q} y for x in C(U), y in C(W) (labels), p in U, q in W.
        Returns (sorted label set, {label: coeff})."""
        m, n = len(U), len(W)
        r = U.index(p) + 1
        rho = tuple(m if k == r else k - 1 if k > r else k for k in range(1, m + 1))
        r2 = W.index(q) + 1
        rho2 = tuple(1 if k == r2 else k + 1 if k < r2 else k for k in range(1, n + 1))
        x2, sx = self.act(m, rho, x)
        y2, sy = self.act(n, rho2, y)
        z = self.comp(m, x2, n, y2)
        L = [u for u in U if u != p] + [w for w in W if w != q]
        Y = tuple(sorted(L))
        rank = {v: i + 1 for i, v in enumerate(Y)}
        tau = tuple(rank[v] for v in L)
        out = {}
        for c, val in z.items():
            c2, sc = self.act(len(Y), tau, c)
            out[c2] = out.get(c2, 0) + sx * sy * sc * val
        return Y, {k: v for k, v in out.items() if v}

    def to_json(self):
        raise NotImplementedError


@lru_cache(maxsize=None)
def _perm_action(C, n, perm):
    d = C.dim(n)
    targets = list(range(d))
    signs = [1] * d
    for j in reversed(reduced_word(perm)):
        t, s = C.gen_action(n, j)
        targets, signs = [t[x] for x in targets], [s[x] * sg for x, sg in zip(targets, signs)]
    return tuple(targets), tuple(signs)


class AlgebraOperad(CyclicOperad):
    """(B, sigma): B placed in arity 2, s_1 acting by sigma, composition = product.

    ``mult[i][j]`` is the product e_i e_j as a coefficient list and
    ``sigma[i]`` the image of e_i.  A non-diagonal sigma is diagonalised so
    the action is monomial; ``basis_change`` records the new basis.
    """

    def __init__(self, mult, sigma, name="algebra", basis_names=None):
        self.name = name
        n = len(sigma)
        mult = [[[Fraction(c) for c in mult[i][j]] for j in range(n)] for i in range(n)]
        sigma = [[Fraction(c) for c in row] for row in sigma]
        self.original = (mult, sigma, basis_names)
        _check_algebra(mult, sigma)
        P, eig = _diagonalise(sigma)
        self.basis_change = P
        self.eigen = eig
        Pinv = _invert(P)
        self.mult = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                # f_a f_b = sum_{ij} P[a][i] P[b][j] e_i e_j
                acc = [Fraction(0)] * n
                for i, pa in enumerate(P[a]):
                    if not pa:
                        continue
                    for j, pb in enumerate(P[b]):
                        if pb:
                            for k, c in enumerate(mult[i][j]):
                                acc[k] += pa * pb * c
                # back to f-coordinates: v = sum_k acc[k] e_k, e_k = sum_l Pinv[k][l] f_l
                out = {}
                for k, c in enumerate(acc):
                    if c:
                        for l, q in enumerate(Pinv[k]):
                            if q:
                                out[l] = out.get(l, 0) + c * q
                self.mult[a][b] = {l: (int(v) if v.denominator == 1 else v) for l, v in out.items() if v}
        self.n = n
        self.basis_names = basis_names or [f"e{i}" for i in range(n)]
        self.unit = _find_unit(self.mult, n)

    @property
    def max_arity(self):
        return 2

    def dim(self, n):
        return self.n if n == 2 else 0

    def gen_action(self, n, j):
        assert n == 2 and j == 1
        return tuple(range(self.n)), tuple(self.eigen)

    def comp(self, m, a, n, b):
        assert m == 2 and n == 2
        return dict(self.mult[a][b])

    def sigma_sign(self, a):
        return self.eigen[a]

    @property
    def is_unital(self):
        return self.unit is not None

    def to_json(self):
        mult, sigma, names = self.original
        return {"kind": "Operad", "family": "algebra", "name": self.name,
                "basis": list(names or [f"e{i}" for i in range(len(sigma))]),
                "mult": [[[str(c) for c in v] for v in row] for row in mult],
                "sigma": [[str(c) for c in row] for row in sigma]}


def _check_algebra(mult, sigma):
    n = len(sigma)
    if any(len(r) != n for r in sigma) or len(mult) != n or any(len(r) != n for r in mult):
        raise OperadError("structure constants have the wrong shape")

    def mul(x, y):
        out = [Fraction(0)] * n
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        for k, c in enumerate(mult[i][j]):
                            out[k] += a * b * c
        return out

    def sig(x):
        out = [Fraction(0)] * n
        for i, a in enumerate(x):
            if a:
                for k, c in enumerate(sigma[i]):
                    out[k] += a * c
        return out

    E = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for i, x in enumerate(E):
        if sig(sig(x)) != x:
            raise OperadError(f"sigma is not an involution on e{i}")
        for j, y in enumerate(E):
            if sig(mul(x, y)) != mul(sig(y), sig(x)):
                raise OperadError(f"sigma is not an anti-automorphism on (e{i}, e{j})")
            for k, z in enumerate(E):
                if mul(mul(x, y), z) != mul(x, mul(y, z)):
                    raise OperadError(f"multiplication is not associative on the triple (e{i}, e{j}, e{k})")


def _diagonalise(sigma):
    """Eigenbasis of an involution: rows of P are new basis vectors (old coordinates)."""
    n = len(sigma)
    rows, eig = [], []
    for s in (1, -1):
        E = EchelonSpace(n)
        for i in range(n):
            v = {k: (sigma[i][k] * s + (1 if k == i else 0)) for k in range(n)}
            v = {k: c for k, c in v.items() if c}
            if v and E.insert(v):
                pass
        for p in sorted(E.rows):
            vec = E.rows[p]
            rows.append([Fraction(vec.get(k, 0)) for k in range(n)])
            eig.append(s)
    if len(rows) != n:
        raise OperadError("sigma is not diagonalisable over Q")
    return rows, eig


def _invert(P):
    n = len(P)
    # solve e_k = sum_l Q[k][l] f_l, f_l = sum_i P[l][i] e_i
    E = EchelonSpace(n)
    for l in range(n):
        E.insert({i: c for i, c in enumerate(P[l]) if c}, {l: 1})
    Q = []
    for k in range(n):
        c = E.coordinates({k: 1})
        Q.append([c.get(l, 0) for l in range(n)])
    return Q


def _find_unit(mult, n):
    # unit u with u b = b u = b for all basis b: linear conditions on u
    rows = []
    target = []
    for b in range(n):
        for k in range(n):
            rows.append([mult[a][b].get(k, 0) for a in range(n)])
            target.append(1 if k == b else 0)
            rows.append([mult[b][a].get(k, 0) for a in range(n)])
            target.append(1 if k == b else 0)
    from .exactla import RationalMatrix, solve
    A = RationalMatrix.from_dense(rows, n)
    x = solve(A, {i: t for i, t in enumerate(target) if t})
    if x is None:
        return None
    return [x.get(i, 0) for i in range(n)]


class ComGe3(CyclicOperad):
    """Com_{>=3}: one basis element in every arity >= 3, trivial action."""

    name = "com-ge3"

    def __init__(self, max_arity=16):
        self._max = max_arity

    @property
    def max_arity(self):
        return self._max

    def dim(self, n):
        return 1 if 3 <= n <= self._max else 0

    def gen_action(self, n, j):
        return (0,), (1,)

    def comp(self, m, a, n, b):
        return {0: 1} if m + n - 2 <= self._max else {}

    @property
    def is_unital(self):
        return False

    def to_json(self):
        return {"kind": "Operad", "family": "com_ge3", "name": self.name}


def algebra_k():
    return AlgebraOperad([[[1]]], [[1]], name="k-id", basis_names=["1"])


def algebra_qz2():
    # Q[Z/2] with sigma = inversion (= identity on group elements)
    return AlgebraOperad([[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [[1, 0], [0, 1]],
                         name="qz2", basis_names=["1", "g"])


def algebra_dual_numbers():
    return AlgebraOperad([[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [[1, 0], [0, 1]],
                         name="dual", basis_names=["1", "x"])


def algebra_mat2_transpose():
    """M_2(Q) with the transpose; sigma is not diagonal in the matrix units."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {u: i for i, u in enumerate(units)}
    mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                mult[i][j][idx[(a, d)]] = 1
    sigma = [[1 if idx[(b, a)] == k else 0 for k in range(4)] for (a, b) in units]
    return AlgebraOperad(mult, sigma, name="mat2-t", basis_names=["E11", "E12", "E21", "E22"])


BUILTIN_OPERADS = {
    "k-id": algebra_k,
    "qz2": algebra_qz2,
    "dual": algebra_dual_numbers,
    "mat2-t": algebra_mat2_transpose,
    "com-ge3": ComGe3,
}


def operad_from_json(data):
    if data.get("kind") != "Operad":
        raise OperadError("not an Operad document")
    fam = data.get("family")
    if fam == "algebra":
        conv = lambda v: Fraction(v)
        mult = [[[conv(c) for c in v] for v in row] for row in data["mult"]]
        sigma = [[conv(c) for c in row] for row in data["sigma"]]
        return AlgebraOperad(mult, sigma, name=data.get("name", "algebra"), basis_names=data.get("basis"))
    if fam == "com_ge3":
        return ComGe3()
    raise OperadError(f"unknown operad family {fam!r}")


def get_operad(name):
    try:
        return BUILTIN_OPERADS[name]()
    except KeyError:
        raise OperadError(f"unknown operad {name!r}; builtins: {sorted(BUILTIN_OPERADS)}") from None


# --------------------------------------------------------- axiom checks

def check_axioms(C, max_arity=6):
    """Cyclic symmetry, stabiliser equivariance and both associativity
    nestings, exhaustively on basis elements up to the given total arity."""
    ar = [n for n in range(1, max_arity + 1) if C.dim(n)]
    failures = []
    # equivariance of the normalised composite under S_{m-1} x S_{n-1}
    for m in ar:
        for n in ar:
            if m + n - 2 > max_arity:
                continue
            for a in range(C.dim(m)):
                for b in range(C.dim(n)):
                    z = C.comp(m, a, n, b)
                    for j in range(1, m - 1):
                        a2, s = C.act(m, _tr(m, j), a)
                        lhs = {k: s * v for k, v in C.comp(m, a2, n, b).items()}
                        if lhs != _act_vec(C, m + n - 2, _tr(m + n - 2, j), z):
                            failures.append(("equivariance-left", m, n, a, b, j))
                    for j in range(2, n):
                        b2, s = C.act(n, _tr(n, j), b)
                        lhs = {k: s * v for k, v in C.comp(m, a, n, b2).items()}
                        if lhs != _act_vec(C, m + n - 2, _tr(m + n - 2, m - 2 + j), z):
                            failures.append(("equivariance-right", m, n, a, b, j))
    # symmetry x o_{p,q} y = y o_{q,p} x on labelled sets
    for m in ar:
        for n in ar:
            if m + n - 2 > max_arity:
                continue
            U = tuple(range(1, m + 1))
            W = tuple(range(m + 1, m + n + 1))
            for a in range(C.dim(m)):
                for b in range(C.dim(n)):
                    for p in U:
                        for q in W:
                            if C.comp_sets(U, a, p, W, b, q) != C.comp_sets(W, b, q, U, a, p):
                                failures.append(("symmetry", m, n, a, b, p, q))
    # associativity
    for m in ar:
        for n in ar:
            for l in ar:
                if m + n + l - 4 > max_arity:
                    continue
                U = tuple(range(1, m + 1))
                W = tuple(range(m + 1, m + n + 1))
                Z = tuple(range(m + n + 1, m + n + l + 1))
                for a, b, c in itertools.product(range(C.dim(m)), range(C.dim(n)), range(C.dim(l))):
                    for p, q in itertools.product(U, W):
                        Y1, xy = C.comp_sets(U, a, p, W, b, q)
                        for r in Y1:
                            for s in Z:
                                lhs = _comp_vec(C, Y1, xy, r, Z, {c: 1}, s)
                                if r in W:
                                    Y2, yz = C.comp_sets(W, b, r, Z, c, s)
                                    rhs = _comp_vec(C, U, {a: 1}, p, Y2, yz, q)
                                else:
                                    Y2, xz = C.comp_sets(U, a, r, Z, c, s)
                                    rhs = _comp_vec(C, Y2, xz, p, W, {b: 1}, q)
                                if lhs != rhs:
                                    failures.append(("associativity", m, n, l, a, b, c, p, q, r, s))
    return failures


def _tr(n, j):
    return tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1))


def _act_vec(C, n, perm, vec):
    out = {}
    for k, v in vec.items():
        k2, s = C.act(n, perm, k)
        out[k2] = out.get(k2, 0) + s * v
    return {k: v for k, v in out.items() if v}


def _comp_vec(C, U, xv, p, W, yv, q):
    Y, out = None, {}
    for a, va in xv.items():
        for b, vb in yv.items():
            Y, z = C.comp_sets(U, a, p, W, b, q)
            for k, v in z.items():
                out[k] = out.get(k, 0) + va * vb * v
    if Y is None:
        Y = tuple(sorted([u for u in U if u != p] + [w for w in W if w != q]))
    return Y, {k: v for k, v in out.items() if v}


# ---------------------------------------------------------- Day powers

def _set_partitions(elems, sizes_ok):
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for k in range(len(rest) + 1):
        if not sizes_ok(k + 1):
            continue
        for others in itertools.combinations(rest, k):
            block = (first,) + others
            left = tuple(x for x in rest if x not in others)
            for tail in _set_partitions(left, sizes_ok):
                yield (block,) + tail


def _inv_sign(seq):
    s = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


class OdotModule:
    """S.(C) (flavor 'S') or L.(C) (flavor 'L') as a db-module.

    The exterior flavor is a module over db with twist (-;-), the symmetric
    one over the untwisted db; the action of the degree-one generator on the
    pair (u, v) is ``contract``.
    """

    def __init__(self, C, flavor):
        if flavor not in ("S", "L"):
            raise ValueError("flavor must be 'S' or 'L'")
        self.C = C
        self.flavor = flavor
        self.twist = MM if flavor == "L" else PP
        self.name = f"{'S' if flavor == 'S' else 'L'}.({C.name})"
        self._bases = {}
        self._index = {}

    @property
    def eps(self):
        return -1 if self.flavor == "L" else 1

    def basis(self, N):
        if N not in self._bases:
            C = self.C
            out = []
            for part in _set_partitions(tuple(range(1, N + 1)), lambda k: C.dim(k) > 0):
                for labs in itertools.product(*[range(C.dim(len(B))) for B in part]):
                    out.append(tuple(zip(part, labs)))
            self._bases[N] = out
            self._index[N] = {k: i for i, k in enumerate(out)}
        return self._bases[N]

    def index(self, N):
        self.basis(N)
        return self._index[N]

    def shapes(self, N):
        """Unlabelled block structures (set partitions into allowed sizes)."""
        return _set_partitions(tuple(range(1, N + 1)), lambda k: self.C.dim(k) > 0)

    def fiber(self, shape):
        """Basis keys over a shape."""
        return [tuple(zip(shape, labs))
                for labs in itertools.product(*[range(self.C.dim(len(B))) for B in shape])]

    def dim(self, N):
        return len(self.basis(N))

    def is_monomial(self, N=None):
        return True

    def act_key(self, perm, key):
        """(sign, key') for perm applied to a basis structure."""
        s = 1
        blocks = []
        for B, lab in key:
            img = [perm[x - 1] for x in B]
            B2 = tuple(sorted(img))
            if len(B) > 1:
                rank = {v: i + 1 for i, v in enumerate(B2)}
                rho = tuple(rank[v] for v in img)
                lab, sg = self.C.act(len(B), rho, lab)
                s *= sg
            blocks.append((B2, lab))
        mins = [b[0][0] for b in blocks]
        if self.flavor == "L":
            s *= _inv_sign(mins)
        blocks.sort(key=lambda b: b[0][0])
        return s, tuple(blocks)

    def act_basis(self, N, perm, i):
        s, k = self.act_key(perm, self.basis(N)[i])
        return {self.index(N)[k]: s}

    def act(self, N, perm, vec):
        out = {}
        B = self.basis(N)
        idx = self.index(N)
        for i, c in vec.items():
            s, k = self.act_key(perm, B[i])
            j = idx[k]
            out[j] = out.get(j, 0) + s * c
        return {k: v for k, v in out.items() if v}

    def contract_key(self, u, v, key):
        """Degree-one generator on the ordered pair (u, v), u != v.
        Returns a list of (coeff, key) in arity N - 2."""
        if u > v:
            return [(self.eps * c, k) for c, k in self.contract_key(v, u, key)]
        a = b = None
        for idx_, (B, _) in enumerate(key):
            if u in B:
                a = idx_
            if v in B:
                b = idx_
        if a == b:
            return []
        d = len(key)
        i, j = min(a, b), max(a, b)
        coef = 1
        if self.flavor == "L":
            # move x_i, x_j to the end, in that order
            if ((d - 1 - i) + (d - 1 - j) - 1) % 2:
                coef = -coef
        (Ua, xa), (Ub, xb) = key[a], key[b]
        if a < b:
            Y, z = self.C.comp_sets(Ua, xa, u, Ub, xb, v)
        else:
            Y, z = self.C.comp_sets(Ub, xb, v, Ua, xa, u)
            coef *= self.eps
        if not Y:
            return []
        rest = [key[k] for k in range(d) if k not in (a, b)]
        shift = lambda x: x - (x > u) - (x > v)
        out = []
        for lab, c in z.items():
            blocks = rest + [(Y, lab)]
            mins = [B[0] for B, _ in blocks]
            s = _inv_sign(mins) if self.flavor == "L" else 1
            blocks = sorted(blocks, key=lambda bl: bl[0][0])
            blocks = tuple((tuple(shift(x) for x in B), l) for B, l in blocks)
            out.append((coef * s * c, blocks))
        return out

    def contract(self, N, u, v, vec):
        B = self.basis(N)
        idx = self.index(N - 2)
        out = {}
        for i, c in vec.items():
            for coef, k in self.contract_key(u, v, B[i]):
                j = idx[k]
                out[j] = out.get(j, 0) + coef * c
        return {k: x for k, x in out.items() if x}

    def to_fbmodule(self, max_arity):
        from .fbmod import FBModule
        bases = {N: self.basis(N) for N in range(max_arity + 1) if self.dim(N)}

        def act(N, j, key):
            s, k = self.act_key(_tr(N, j), key)
            return {k: s}

        return FBModule.from_action(bases, act, name=self.name)


def odot_module(C, flavor):
    return OdotModule(C, flavor)


# --------------------------------------- wreath normalisation route

def wreath_normalize(f, u, v):
    """For a decorated diagram f (sequence f(1..2t)) and u != v, return the
    wreath element alpha (same chord) or beta (different chords)."""
    t = len(f) // 2
    pos = {x: i + 1 for i, x in enumerate(f)}
    iu, iv = (pos[u] + 1) // 2, (pos[v] + 1) // 2
    if iu == iv:
        # alpha = rho_{i} tau_t^{eps}: chord i moved last, u first
        eps = 0 if pos[u] % 2 == 1 else 1
        w = WreathElement.shuffle(t, iu)
        if eps:
            w = w @ WreathElement.flip(t, t)
        return "alpha", w
    eu = 0 if pos[u] == 2 * iu else 1
    ev = 0 if pos[v] == 2 * iv - 1 else 1
    rest = [k for k in range(1, t + 1) if k not in (iu, iv)]
    psi = WreathElement((0,) * t, tuple(rest) + (iu, iv))
    w = psi
    if eu:
        w = w @ WreathElement.flip(t, t - 1)
    if ev:
        w = w @ WreathElement.flip(t, t)
    return "beta", w


def module_action(C, flavor, u, v, N):
    """Matrix columns of the degree-one generator g_{u,v} on L.(B)(N) or S.(B)(N)
    through the wreath normalisation of the underlying diagram.  Only for
    algebras with involution."""
    if not isinstance(C, AlgebraOperad):
        raise OperadError("wreath route needs an algebra with involution")
    M = OdotModule(C, flavor)
    eps = M.eps
    target = M.index(N - 2)
    cols = []
    for key in M.basis(N):
        t = len(key)
        f = [x for B, _ in key for x in B]
        labs = [l for _, l in key]
        kind, beta = wreath_normalize(f, u, v)
        if kind == "alpha":
            cols.append({})
            continue
        bp = beta.to_permutation()
        fb = [f[bp[p] - 1] for p in range(2 * t)]
        assert fb[2 * t - 3] == u and fb[2 * t - 2] == v
        coef = 1
        new = []
        for k in range(t):
            lab = labs[beta.block_perm[k] - 1]
            if beta.flips[k]:
                coef *= C.sigma_sign(lab)
            new.append(lab)
        if flavor == "L":
            from .symrep import sign as psign
            coef *= psign(beta.block_perm)
        chords = [(fb[2 * k], fb[2 * k + 1]) for k in range(t - 2)]
        last = (fb[2 * t - 4], fb[2 * t - 1])
        prod = C.comp(2, new[t - 2], 2, new[t - 1])
        shift = lambda x: x - (x > u) - (x > v)
        col = {}
        for lab, c in prod.items():
            ch = chords + [last]
            ls = new[: t - 2] + [lab]
            s = coef * c
            fixed = []
            for (a, b), l in zip(ch, ls):
                if a > b:
                    a, b = b, a
                    s *= C.sigma_sign(l)
                fixed.append(((shift(a), shift(b)), l))
            if flavor == "L":
                s *= _inv_sign([bl[0][0] for bl in fixed])
            fixed.sort()
            j = target[tuple(fixed)]
            col[j] = col.get(j, 0) + s
        cols.append({k: x for k, x in col.items() if x})
    from .exactla import RationalMatrix
    return RationalMatrix(len(target), len(cols), cols)


def check_module(M, N, pairs=None):
    """Quadratic relations and S_N-equivariance of the degree-one generators
    on M(N).  Returns a list of failures."""
    fails = []
    if M.dim(N) == 0 or N < 2:
        return fails
    eps = -1 if M.twist.order < 0 else 1
    basis = range(M.dim(N))
    shift = lambda x, a, b: x - (x > a) - (x > b)
    if N >= 4:
        for u, v in itertools.combinations(range(1, N + 1), 2):
            for u2, v2 in itertools.combinations(range(1, N + 1), 2):
                if len({u, v, u2, v2}) < 4 or (u, v) >= (u2, v2):
                    continue
                for i in basis:
                    lhs = M.contract(N - 2, shift(u2, u, v), shift(v2, u, v), M.contract(N, u, v, {i: 1}))
                    rhs = M.contract(N - 2, shift(u, u2, v2), shift(v, u2, v2), M.contract(N, u2, v2, {i: 1}))
                    if lhs != {k: eps * x for k, x in rhs.items()}:
                        fails.append(("quadratic", N, (u, v), (u2, v2), i))
    for j in range(1, N):
        s = _tr(N, j)
        for u, v in itertools.combinations(range(1, N + 1), 2):
            su, sv = s[u - 1], s[v - 1]
            rest = [x for x in range(1, N + 1) if x not in (u, v)]
            img = [s[x - 1] for x in rest]
            rank = {x: k + 1 for k, x in enumerate(sorted(img))}
            sbar = tuple(rank[x] for x in img)
            for i in basis:
                lhs = M.contract(N, su, sv, M.act(N, s, {i: 1}))
                rhs = M.act(N - 2, sbar, M.contract(N, u, v, {i: 1}))
                if lhs != rhs:
                    fails.append(("equivariance", N, j, (u, v), i))
    return fails
