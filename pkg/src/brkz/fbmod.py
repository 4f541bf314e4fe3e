"""FB-modules (symmetric sequences) over Q.

An FB-module is stored arity by arity as matrices for the adjacent
transpositions s_1, ..., s_{n-1}.  A permutation p acts by relabelling i as
p(i), so rho(p o q) = rho(p) rho(q).  Day convolution, symmetric and
exterior Day powers, and twisted coinvariants under permutation groups live
here.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial

from .exactla import EchelonSpace, RationalMatrix, vec_iadd
from .symrep import (Partition, compose, cycle_type, cycle_type_representative,
                     decompose_character, identity, partitions, reduced_word)


def _transposition(n, j):
    return tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1))


def _is_monomial(M):
    return all(len(c) == 1 and abs(next(iter(c.values()))) == 1 for c in M.cols)


class FBModule:
    """Finitely supported FB-module given by generator matrices."""

    def __init__(self, gens, name="", labels=None, check=True):
        # gens: {n: (dim, [S_1, ..., S_{n-1}])}
        self.name = name
        self._gens = {}
        for n, (dim, mats) in gens.items():
            if dim == 0:
                continue
            if len(mats) != max(n - 1, 0):
                raise ValueError(f"arity {n}: expected {n - 1} generators")
            for S in mats:
                if S.shape != (dim, dim):
                    raise ValueError(f"arity {n}: generator has shape {S.shape}")
            self._gens[n] = (dim, list(mats))
        self.labels = labels or {}
        if check:
            self.validate()

    @property
    def support(self):
        return sorted(self._gens)

    def dim(self, n):
        return self._gens.get(n, (0, None))[0]

    def generators(self, n):
        return self._gens[n][1] if n in self._gens else []

    def is_monomial(self, n):
        return all(_is_monomial(S) for S in self.generators(n))

    def validate(self):
        """Coxeter relations for S_n in every arity."""
        for n, (dim, S) in self._gens.items():
            I = RationalMatrix.identity(dim)
            for i in range(len(S)):
                if S[i] @ S[i] != I:
                    raise ValueError(f"arity {n}: s_{i + 1}^2 != 1")
                if i + 1 < len(S):
                    A = S[i] @ S[i + 1]
                    if A @ A @ A != I:
                        raise ValueError(f"arity {n}: braid relation fails at {i + 1}")
                for j in range(i + 2, len(S)):
                    if S[i] @ S[j] != S[j] @ S[i]:
                        raise ValueError(f"arity {n}: s_{i + 1}, s_{j + 1} do not commute")
        return True

    def act(self, n, perm, vec):
        S = self.generators(n)
        for j in reversed(reduced_word(perm)):
            vec = S[j - 1].apply(vec)
        return vec

    def matrix(self, n, perm):
        dim = self.dim(n)
        return RationalMatrix(dim, dim, [self.act(n, perm, {i: 1}) for i in range(dim)])

    def character(self, n):
        return {mu: self.matrix(n, cycle_type_representative(mu)).trace() for mu in partitions(n)}

    def decompose(self, n):
        if self.dim(n) == 0:
            return {}
        return decompose_character(self.character(n), n)

    def to_json(self):
        return {
            "kind": "FBModule",
            "name": self.name,
            "arities": {
                str(n): {"dim": d, "generators": [[[str(v) for v in row] for row in S.to_dense()] for S in mats]}
                for n, (d, mats) in sorted(self._gens.items())
            },
        }

    @classmethod
    def from_json(cls, data):
        if data.get("kind") != "FBModule":
            raise ValueError("not an FBModule document")
        gens = {}
        for n, spec in data["arities"].items():
            d = int(spec["dim"])
            mats = [RationalMatrix.from_dense([[Fraction(v) for v in row] for row in S], d) for S in spec["generators"]]
            gens[int(n)] = (d, mats)
        return cls(gens, name=data.get("name", ""))

    @classmethod
    def from_action(cls, bases, act_basis, name=""):
        """Build from bases {n: [keys]} and act_basis(n, j, key) -> {key: coeff}
        giving s_j on a basis element."""
        gens = {}
        for n, keys in bases.items():
            index = {k: i for i, k in enumerate(keys)}
            mats = []
            for j in range(1, n):
                cols = []
                for k in keys:
                    cols.append({index[k2]: v for k2, v in act_basis(n, j, k).items() if v})
                mats.append(RationalMatrix(len(keys), len(keys), cols))
            gens[n] = (len(keys), mats)
        return cls(gens, name=name, labels=bases)


def trivial_module(n):
    return FBModule({n: (1, [RationalMatrix.identity(1)] * (n - 1))}, name=f"triv{n}")


def sign_module(n):
    return FBModule({n: (1, [RationalMatrix.identity(1).scale(-1)] * (n - 1))}, name=f"sgn{n}")


def standard_tableaux(lam):
    lam = Partition(lam)
    n = lam.size
    out = []

    def rec(k, rows):
        if k > n:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                rec(k + 1, rows)
                rows[i].pop()

    rec(1, [[] for _ in lam])
    return out


def specht_module(lam):
    """Young's seminormal form of S_lam (rational matrices)."""
    lam = Partition(lam)
    n = lam.size
    tabs = standard_tableaux(lam)
    index = {T: i for i, T in enumerate(tabs)}

    def pos(T):
        return {v: (r, c) for r, row in enumerate(T) for c, v in enumerate(row)}

    mats = []
    for j in range(1, n):
        cols = []
        for T in tabs:
            p = pos(T)
            (r1, c1), (r2, c2) = p[j], p[j + 1]
            rho = Fraction(1, (c2 - r2) - (c1 - r1))
            col = {index[T]: rho}
            if r1 != r2 and c1 != c2:
                T2 = tuple(tuple(j + 1 if v == j else j if v == j + 1 else v for v in row) for row in T)
                # j+1 in a lower row: s_j v_T = rho v_T + v_T'; otherwise (1 - rho^2) v_T'
                col[index[T2]] = 1 if r2 > r1 else 1 - rho * rho
            cols.append(col)
        mats.append(RationalMatrix(len(tabs), len(tabs), cols))
    return FBModule({n: (len(tabs), mats)}, name=f"S{lam}")


def direct_sum(*mods):
    gens = {}
    for M in mods:
        for n in M.support:
            d0, S0 = gens.get(n, (0, [RationalMatrix(0, 0)] * (n - 1)))
            d1, S1 = M.dim(n), M.generators(n)
            mats = []
            for A, B in zip(S0, S1):
                cols = [dict(c) for c in A.cols] + [{r + d0: v for r, v in c.items()} for c in B.cols]
                mats.append(RationalMatrix(d0 + d1, d0 + d1, cols))
            gens[n] = (d0 + d1, mats)
    return FBModule(gens, name="+".join(M.name for M in mods))


# ---------------------------------------------------------- Day powers

def _product_basis(F, G, n):
    out = []
    for k in range(n + 1):
        if not F.dim(k) or not G.dim(n - k):
            continue
        for S in itertools.combinations(range(1, n + 1), k):
            for a in range(F.dim(k)):
                for b in range(G.dim(n - k)):
                    out.append((S, a, b))
    return out


def day_convolve(F, G, max_arity):
    """(F (.) G)(n) = sum over S + T = n of F(S) (x) G(T), for n <= max_arity."""
    bases = {n: _product_basis(F, G, n) for n in range(max_arity + 1)}
    bases = {n: b for n, b in bases.items() if b}

    def act(n, j, key):
        S, a, b = key
        T = tuple(x for x in range(1, n + 1) if x not in S)
        if j in S and j + 1 in S:
            i = S.index(j) + 1
            return {(S, a2, b): v for a2, v in F.generators(len(S))[i - 1].cols[a].items()}
        if j in T and j + 1 in T:
            i = T.index(j) + 1
            return {(S, a, b2): v for b2, v in G.generators(len(T))[i - 1].cols[b].items()}
        S2 = tuple(sorted(j + 1 if x == j else j if x == j + 1 else x for x in S))
        return {(S2, a, b): 1}

    return FBModule.from_action(bases, act, name=f"({F.name})(.)({G.name})", )


def odot_power(F, d, flavor, max_arity):
    """Image of the (anti)symmetrisation idempotent on F^{(.)d} (flavor 'S' or 'L')."""
    if flavor not in ("S", "L"):
        raise ValueError("flavor must be 'S' or 'L'")
    eps = -1 if flavor == "L" else 1
    gens = {}
    labels = {}
    for n in range(max_arity + 1):
        # basis of F^{(.)d}(n): ordered tuples of (block, label)
        basis = []
        for comp in _set_compositions(n, d, F):
            for labs in itertools.product(*[range(F.dim(len(B))) for B in comp]):
                basis.append(tuple(zip(comp, labs)))
        if not basis:
            continue
        index = {k: i for i, k in enumerate(basis)}
        # signed orbits under factor permutations
        orbit_of = {}
        reps = []
        for k in basis:
            if k in orbit_of:
                continue
            members = {}
            dead = False
            for perm in itertools.permutations(range(d)):
                k2 = tuple(k[p] for p in perm)
                s = eps ** _inversions(perm)
                if k2 in members and members[k2] != s:
                    dead = True
                members[k2] = s
            for k2, s in members.items():
                orbit_of[k2] = None if dead else (len(reps), s)
            if not dead:
                reps.append(k)
        if not reps:
            continue

        def act_key(j, key):
            # s_j applied to a pure tensor, as {key: coeff}
            terms = [((), 1)]
            for B, a in key:
                if j in B and j + 1 in B:
                    img = F.generators(len(B))[B.index(j)].cols[a]
                    terms = [(pre + ((B, a2),), c * v) for pre, c in terms for a2, v in img.items()]
                else:
                    B2 = tuple(sorted(j + 1 if x == j else j if x == j + 1 else x for x in B))
                    terms = [(pre + ((B2, a),), c) for pre, c in terms]
            res = {}
            for k2, c in terms:
                res[k2] = res.get(k2, 0) + c
            return res

        mats = []
        for j in range(1, n):
            cols = []
            for r in reps:
                col = {}
                for k2, c in act_key(j, r).items():
                    o = orbit_of[k2]
                    if o is not None:
                        col[o[0]] = col.get(o[0], 0) + c * o[1]
                cols.append({i: v for i, v in col.items() if v})
            mats.append(RationalMatrix(len(reps), len(reps), cols))
        gens[n] = (len(reps), mats)
        labels[n] = reps
    return FBModule(gens, name=f"{flavor}^{d}({F.name})", labels=labels)


def _inversions(perm):
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def _set_compositions(n, d, F):
    """Ordered d-tuples of disjoint blocks covering 1..n with F nonzero on each size."""
    def rec(rest, k):
        if k == 0:
            if not rest:
                yield ()
            return
        for size in range(len(rest) + 1):
            if not F.dim(size):
                continue
            for B in itertools.combinations(rest, size):
                left = tuple(x for x in rest if x not in B)
                for tail in rec(left, k - 1):
                    yield (B,) + tail
    yield from rec(tuple(range(1, n + 1)), d)


# ------------------------------------------------------- coinvariants

class Coinvariants:
    """Twisted coinvariants M_H^chi = M / span(h m - chi(h) m).

    ``act_basis(perm, i)`` returns the image of basis vector i as a sparse
    vector; ``gens`` are (perm, chi) pairs generating H.  Monomial actions
    use signed orbits, others an echelon form of the relations.
    """

    def __init__(self, dim, act_basis, gens):
        self.ambient = dim
        images = [(chi, [act_basis(perm, i) for i in range(dim)]) for perm, chi in gens]
        self.monomial = all(len(v) == 1 and abs(next(iter(v.values()))) == 1
                            for _, imgs in images for v in imgs)
        if self.monomial:
            self._orbits(dim, images)
        else:
            self._relations(dim, images)

    def _orbits(self, dim, images):
        parent = list(range(dim))
        rel = [1] * dim  # e_i = rel[i] * e_parent[i] in the quotient
        dead = [False] * dim

        def find(i):
            s = 1
            path = []
            while parent[i] != i:
                path.append(i)
                s *= rel[i]
                i = parent[i]
            root = i
            # compress
            acc = s
            for p in path:
                r = acc
                acc *= rel[p]
                parent[p], rel[p] = root, r
            return root, s

        for chi, imgs in images:
            for i in range(dim):
                (j, s), = imgs[i].items()
                # [s e_j] = chi [e_i]  =>  e_j = s*chi e_i
                ri, si = find(i)
                rj, sj = find(j)
                want = s * chi * si  # e_j in terms of root ri
                if ri == rj:
                    if sj != want:
                        dead[ri] = True
                else:
                    # e_j = sj e_rj = want e_ri  =>  e_rj = sj*want e_ri
                    parent[rj], rel[rj] = ri, sj * want
                    dead[ri] = dead[ri] or dead[rj]
        self._map = [None] * dim
        roots = {}
        self.reps = []
        for i in range(dim):
            r, s = find(i)
            if dead[r]:
                continue
            if r not in roots:
                roots[r] = len(self.reps)
                self.reps.append(r)
            self._map[i] = (roots[r], s)
        # representatives carry sign +1 by construction (roots map to themselves)
        self.dim = len(self.reps)

    def _relations(self, dim, images):
        E = EchelonSpace(dim)
        for chi, imgs in images:
            for i in range(dim):
                v = dict(imgs[i])
                v[i] = v.get(i, 0) - chi
                v = {k: x for k, x in v.items() if x}
                if v:
                    E.insert(v)
        self._E = E
        self.reps = [i for i in range(dim) if i not in E.rows]
        self._pos = {r: k for k, r in enumerate(self.reps)}
        self.dim = len(self.reps)

    def project(self, vec):
        out = {}
        if self.monomial:
            for i, c in vec.items():
                m = self._map[i]
                if m is not None:
                    out[m[0]] = out.get(m[0], 0) + c * m[1]
        else:
            res, _ = self._E.reduce(vec)
            for i, c in res.items():
                out[self._pos[i]] = c
        return {k: v for k, v in out.items() if v}

    def lift(self, k):
        return {self.reps[k]: 1}
