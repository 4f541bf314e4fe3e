"""Koszul complexes for the twisted Brauer categories.

Two flavors:

* even: K_- pairs ub(-;+) with a module over db(-;-); the module is L.(C).
* odd:  K_+ pairs ub(+;-) with a module over untwisted db; the module is S.(C).

Ext side at an object N (cohomological, degree = number of red chords):
terms are ub(s, N) (x)_{S_s} M(s), realised on the free orbit
representatives [order-preserving iota_Y, matching mu] (x) M(|Y|).

Tor side at l legs (homological, degree t = (x - l)/2): terms are twisted
coinvariants of M(x) under the stabiliser S_2 wr S_t of the standard
diagram (legs 1..l, chords (l+1,l+2), (l+3,l+4), ...).
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .brauer import (MP, PM, BrauerMorphism, canonical_inclusion, compose_basis,
                     degree_one, hom_basis, matchings)
from .exactla import (RationalMatrix, column_space, homology, rank,
                      trace_on_homology)
from .fbmod import Coinvariants
from .symrep import (MM, PP, Partition, compose, cycle_type_representative, decompose_character,
                     hook_dimension, identity, inverse, isotypic_projector, partitions, schur_from_weights, sign)

SCHEMA = "brkz-report/1"


class FlavorMismatch(ValueError):
    pass


class InvariantViolation(RuntimeError):
    pass


FLAVORS = {
    # flavor: (ub twist, required module twist, Day power)
    "even": (MP, MM, "L"),
    "odd": (PM, PP, "S"),
}


def _check_flavor(M, flavor):
    if flavor not in FLAVORS:
        raise FlavorMismatch(f"unknown flavor {flavor!r}")
    need = FLAVORS[flavor][1]
    if tuple(M.twist) != tuple(need):
        raise FlavorMismatch(f"{flavor} flavor needs a module over db{need}, got db{M.twist}")
    return FLAVORS[flavor][0]


class ChainComplex:
    """Finite complex of finite-dimensional spaces with exact differentials.

    ``diffs[k]`` maps degree k to degree k + step.  ``act(k, perm, vec)``
    (optional) is a symmetric group action on each term commuting with d.
    """

    def __init__(self, dims, diffs, step, group_n=None, act=None, bases=None, meta=None):
        self.dims = dict(dims)
        self.diffs = diffs
        self.step = step
        self.group_n = group_n
        self._act = act
        self.bases = bases or {}
        self.meta = meta or {}
        self._hom = {}

    @property
    def degrees(self):
        return sorted(self.dims)

    def d(self, k):
        return self.diffs.get(k)

    def d_in(self, k):
        return self.diffs.get(k - self.step)

    def act(self, k, perm, vec):
        return self._act(k, perm, vec)

    def check_d_squared(self):
        bad = []
        for k in self.degrees:
            a, b = self.d(k), self.d(k + self.step)
            if a is not None and b is not None and not (b @ a).is_zero():
                bad.append(k)
        return bad

    def check_equivariance(self, perms=None):
        if self._act is None:
            return []
        n = self.group_n
        if perms is None:
            perms = [tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1))
                     for j in range(1, n)]
        bad = []
        for k in self.degrees:
            D = self.d(k)
            if D is None:
                continue
            for p in perms:
                for i in range(self.dims[k]):
                    if D.apply(self.act(k, p, {i: 1})) != self.act(k + self.step, p, D.apply({i: 1})):
                        bad.append((k, p, i))
                        break
        return bad

    def homology_dim(self, k):
        n = self.dims.get(k, 0)
        out = self.d(k)
        inc = self.d_in(k)
        return n - (rank(out) if out is not None else 0) - (rank(inc) if inc is not None else 0)

    def homology(self, k):
        if k not in self._hom:
            self._hom[k] = homology(self.d_in(k), self.d(k), self.dims.get(k, 0))
        return self._hom[k]

    def homology_character(self, k):
        """Traces of cycle-type representatives on H_k (exact, via cycle and
        boundary echelon bases)."""
        H = self.homology(k)
        n = self.group_n
        chi = {}
        for mu in partitions(n):
            g = cycle_type_representative(mu)
            chi[mu] = trace_on_homology(H, lambda v: self.act(k, g, v)) if H.dim else 0
        return chi

    def chain_character(self, k):
        """Traces of cycle-type representatives on the chain space C_k; equal
        to the homology character when C_k has no differentials in or out."""
        n = self.group_n
        chi = {}
        for mu in partitions(n):
            g = cycle_type_representative(mu)
            chi[mu] = sum(self.act(k, g, {i: 1}).get(i, 0) for i in range(self.dims.get(k, 0)))
        return chi

    def young_coinvariant_dims(self, mu):
        """{k: dim H_k(C)_{S_mu}} from the coinvariant complex (ranks only)."""
        n = self.group_n
        gens = []
        start = 1
        for part in mu:
            for j in range(start, start + part - 1):
                gens.append((tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1)), 1))
            start += part
        if not gens:
            return {k: self.homology_dim(k) for k in self.degrees}
        Q = {k: Coinvariants(self.dims[k], lambda p, i, k=k: self.act(k, p, {i: 1}), gens)
             for k in self.degrees}
        ranks = {}
        for k in self.degrees:
            D = self.d(k)
            if D is None or k + self.step not in Q:
                continue
            Q2 = Q[k + self.step]
            cols = [Q2.project(D.apply(Q[k].lift(q))) for q in range(Q[k].dim)]
            ranks[k] = rank(RationalMatrix(Q2.dim, Q[k].dim, cols))
        return {k: Q[k].dim - ranks.get(k, 0) - ranks.get(k - self.step, 0) for k in self.degrees}

    def decompose_all(self, method="coinvariants"):
        """Specht multiplicities of every homology group."""
        n = self.group_n
        if method == "traces":
            return {k: self.decompose(k) for k in self.degrees}
        if n == 0:
            return {k: ({Partition(): h} if (h := self.homology_dim(k)) else {}) for k in self.degrees}
        weights = {k: {} for k in self.degrees}
        for mu in partitions(n):
            for k, v in self.young_coinvariant_dims(mu).items():
                weights[k][mu] = v
        return {k: schur_from_weights(w, n) for k, w in weights.items()}

    def decompose(self, k):
        H = self.homology(k)
        if H.dim == 0:
            return {}
        if self.group_n == 0:
            return {Partition(): H.dim}
        return decompose_character(self.homology_character(k), self.group_n)


# ------------------------------------------------------------ Ext side

def _ext_basis(M, N, s):
    """Keys (Y, mu, i) for degree s at object N."""
    k = N - 2 * s
    if k < 0 or M.dim(k) == 0:
        return []
    out = []
    for Y in itertools.combinations(range(1, N + 1), k):
        rest = [x for x in range(1, N + 1) if x not in Y]
        for mu in matchings(rest):
            for i in range(M.dim(k)):
                out.append((Y, mu, i))
    return out


def _insert_sign(mu, a):
    """(-1)^(number of chords of mu starting before a)."""
    return -1 if sum(1 for c in mu if c[0] < a) % 2 else 1


def ext_complex(M, flavor, N, oracle=False):
    """Ext-side Koszul complex at the object N with its S_N action."""
    ub_tw = _check_flavor(M, flavor)
    order_sign = ub_tw.order < 0
    bases = {}
    for s in range(N // 2 + 1):
        b = _ext_basis(M, N, s)
        if b:
            bases[s] = b
    index = {s: {k: i for i, k in enumerate(b)} for s, b in bases.items()}
    diffs = {}
    for s, b in bases.items():
        if s + 1 not in bases:
            continue
        tgt = index[s + 1]
        cols = []
        for (Y, mu, i) in b:
            k = len(Y)
            col = {}
            for a in range(1, k + 1):
                for c in range(a + 1, k + 1):
                    img = M.contract(k, a, c, {i: 1})
                    if not img:
                        continue
                    if oracle:
                        f = BrauerMorphism(k, N, Y, mu)
                        sg, h = compose_basis(f, degree_one(k, a, c), ub_tw)
                        Y2, mu2 = h.injection, h.chords
                    else:
                        ya, yc = Y[a - 1], Y[c - 1]
                        Y2 = tuple(y for y in Y if y not in (ya, yc))
                        mu2 = tuple(sorted(mu + ((ya, yc),)))
                        sg = _insert_sign(mu, ya) if order_sign else 1
                    for j, v in img.items():
                        r = tgt[(Y2, mu2, j)]
                        col[r] = col.get(r, 0) + sg * v
            cols.append({r: v for r, v in col.items() if v})
        diffs[s] = RationalMatrix(len(bases[s + 1]), len(b), cols)

    def act(s, perm, vec):
        out = {}
        b, idx = bases[s], index[s]
        for r, c in vec.items():
            Y, mu, i = b[r]
            sg = 1
            ch = []
            for x, y in mu:
                x2, y2 = perm[x - 1], perm[y - 1]
                if x2 > y2:
                    x2, y2 = y2, x2
                    if ub_tw.direction < 0:
                        sg = -sg
                ch.append((x2, y2))
            if order_sign and len(ch) > 1:
                sg *= sign(tuple(sorted(range(1, len(ch) + 1), key=lambda q: ch[q - 1][0])))
            ch = tuple(sorted(ch))
            img = [perm[y - 1] for y in Y]
            Y2 = tuple(sorted(img))
            rk = {v: q + 1 for q, v in enumerate(Y2)}
            pi = tuple(rk[v] for v in img)
            for j, v in M.act(len(Y), pi, {i: 1}).items():
                t = idx[(Y2, ch, j)]
                out[t] = out.get(t, 0) + sg * c * v
        return {k: v for k, v in out.items() if v}

    dims = {s: len(b) for s, b in bases.items()}
    return ChainComplex(dims, diffs, +1, group_n=N, act=act, bases=bases,
                        meta={"side": "ext", "flavor": flavor, "object": N, "module": M.name})


def ub_push(M, flavor, N, s, d, vec, target_index):
    """Chain-level action of the canonical inclusion i_{N,d} on degree s."""
    ub_tw = _check_flavor(M, flavor)
    inc = canonical_inclusion(N, d)
    out = {}
    base = _ext_basis(M, N, s)
    for r, c in vec.items():
        Y, mu, i = base[r]
        sg, h = compose_basis(inc, BrauerMorphism(len(Y), N, Y, mu), ub_tw)
        t = target_index[(h.injection, h.chords, i)]
        out[t] = out.get(t, 0) + sg * c
    return out


def isotypic_cycles(cx, k, lam):
    """Cycle representatives spanning the lam-isotypic part of H^k."""
    H = cx.homology(k)
    if H.dim == 0:
        return []
    n = cx.group_n
    gens = []
    for j in range(1, n):
        s = tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1))
        cols = []
        for z in H.reps:
            cols.append({q: v for q, v in enumerate(H.coordinates(cx.act(k, s, z))) if v})
        gens.append(RationalMatrix(H.dim, H.dim, cols))
    P = isotypic_projector(lam, gens)
    img = column_space(P)
    out = []
    for p in sorted(img.rows):
        coords = img.rows[p]
        z = {}
        for q, a in coords.items():
            for key, v in H.reps[q].items():
                z[key] = z.get(key, 0) + a * v
        out.append({key: v for key, v in z.items() if v})
    return out


def nontorsion_check(M, flavor, lam, d):
    """Push the lam-isotypic part of Ext^0 at 2n = |lam| along i_{2n,d} and
    test that it is not a coboundary at 2n + 2d.  Returns (dim of the class
    space, rank of its image modulo coboundaries)."""
    lam = Partition(lam)
    N = lam.size
    cx = ext_complex(M, flavor, N)
    Z = isotypic_cycles(cx, 0, lam)
    if not Z:
        return 0, 0
    N2 = N + 2 * d
    tgt_basis = _ext_basis(M, N2, d)
    tgt_index = {k: i for i, k in enumerate(tgt_basis)}
    pushed = [ub_push(M, flavor, N, 0, d, z, tgt_index) for z in Z]
    cx2 = ext_complex_partial(M, flavor, N2, d - 1)
    B = cx2
    r0 = rank(B) if B is not None else 0
    W = RationalMatrix.from_columns(len(tgt_basis), pushed)
    r1 = rank(B.hstack(W)) if B is not None else rank(W)
    return len(Z), r1 - r0


def ext_complex_partial(M, flavor, N, s):
    """Only the differential from degree s to s + 1 at object N."""
    ub_tw = _check_flavor(M, flavor)
    src = _ext_basis(M, N, s)
    dst = _ext_basis(M, N, s + 1)
    if not src:
        return None
    idx = {k: i for i, k in enumerate(dst)}
    order_sign = ub_tw.order < 0
    cols = []
    for (Y, mu, i) in src:
        k = len(Y)
        col = {}
        for a in range(1, k + 1):
            for c in range(a + 1, k + 1):
                img = M.contract(k, a, c, {i: 1})
                if not img:
                    continue
                ya, yc = Y[a - 1], Y[c - 1]
                Y2 = tuple(y for y in Y if y not in (ya, yc))
                mu2 = tuple(sorted(mu + ((ya, yc),)))
                sg = _insert_sign(mu, ya) if order_sign else 1
                for j, v in img.items():
                    r = idx[(Y2, mu2, j)]
                    col[r] = col.get(r, 0) + sg * v
        cols.append({r: v for r, v in col.items() if v})
    return RationalMatrix(len(dst), len(src), cols)


# ------------------------------------------------------------ Tor side

def _swap(n, a, b):
    return tuple(b if x == a else a if x == b else x for x in range(1, n + 1))


def stabilizer_generators(l, t, tw):
    """Generators of S_2 wr S_t on positions l+1..l+2t with twist values."""
    x = l + 2 * t
    gens = []
    for k in range(t):
        a = l + 2 * k + 1
        gens.append((_swap(x, a, a + 1), tw.direction))
    for k in range(t - 1):
        a = l + 2 * k + 1
        p = list(range(1, x + 1))
        p[a - 1], p[a + 1] = a + 2, a
        p[a], p[a + 2] = a + 3, a + 1
        gens.append((tuple(p), tw.order))
    return gens


def tor_term(M, flavor, l, x):
    ub_tw = _check_flavor(M, flavor)
    t = (x - l) // 2
    dim = M.dim(x)
    return Coinvariants(dim, lambda p, i: M.act_basis(x, p, i) if hasattr(M, "act_basis")
                        else M.act(x, p, {i: 1}), stabilizer_generators(l, t, ub_tw))


class OrbitTorTerm:
    """The same twisted coinvariants as ``tor_term`` without enumerating the
    ambient M(x).  A breadth-first search over unlabelled shapes records, for
    each shape S, an element h_S carrying the orbit representative S0 to S;
    the Schreier elements generate Stab(S0), and the labels over S0 are
    reduced by ordinary coinvariants.  Then [k] = chi(h_S) [h_S^-1 k]."""

    def __init__(self, M, l, t, tw):
        self.M = M
        x = l + 2 * t
        gens = stabilizer_generators(l, t, tw)
        self.trans = {}
        schreier = {}
        reps = []
        for S in M.shapes(x):
            if S in self.trans:
                continue
            r = len(reps)
            reps.append(S)
            schreier[r] = {}
            self.trans[S] = (r, tuple(range(1, x + 1)), 1)
            queue = [S]
            while queue:
                A = queue.pop()
                _, hA, cA = self.trans[A]
                for g, cg in gens:
                    B = _push_shape(A, g)
                    hB = tuple(g[i - 1] for i in hA)
                    if B not in self.trans:
                        self.trans[B] = (r, hB, cA * cg)
                        queue.append(B)
                    else:
                        _, hB0, cB0 = self.trans[B]
                        a = compose(inverse(hB0), hB)
                        schreier[r].setdefault(a, cB0 * cg * cA)
        self.reps = reps
        self.blocks = []
        self.basis = []
        offset = 0
        for r, S in enumerate(reps):
            keys = M.fiber(S)
            kidx = {k: i for i, k in enumerate(keys)}

            def act(p, i, keys=keys, kidx=kidx):
                s, k2 = M.act_key(p, keys[i])
                return {kidx[k2]: s}
            Q = Coinvariants(len(keys), act, [(a, c) for a, c in schreier[r].items()
                                              if a != tuple(range(1, x + 1))])
            self.blocks.append((keys, kidx, Q, offset))
            self.basis += [keys[i] for i in Q.reps]
            offset += Q.dim
        self.dim = offset

    def project_key(self, key):
        S = tuple(B for B, _ in key)
        r, h, c = self.trans[S]
        s, k0 = self.M.act_key(inverse(h), key)
        keys, kidx, Q, off = self.blocks[r]
        out = Q.project({kidx[k0]: c * s})
        return {off + i: v for i, v in out.items()}

    def project(self, keyvec):
        out = {}
        for k, v in keyvec.items():
            for i, w in self.project_key(k).items():
                out[i] = out.get(i, 0) + v * w
        return {i: v for i, v in out.items() if v}

    def lift(self, i):
        return {self.basis[i]: 1}


def _push_shape(S, g):
    return tuple(sorted(tuple(sorted(g[x - 1] for x in B)) for B in S))


def tor_complex_orbits(M, flavor, l, x_max):
    """Tor-side complex built from shape orbits (scales to larger x)."""
    ub_tw = _check_flavor(M, flavor)
    terms = {}
    for x in range(l, x_max + 1, 2):
        T = OrbitTorTerm(M, l, (x - l) // 2, ub_tw)
        if T.reps:
            terms[(x - l) // 2] = T
    diffs = {}
    for t, T in terms.items():
        if t - 1 not in terms or T.dim == 0:
            continue
        x = l + 2 * t
        T2 = terms[t - 1]
        coeffs = [(-1) ** (t - k) if ub_tw.order < 0 else 1 for k in range(1, t + 1)]
        cols = []
        for key in T.basis:
            acc = {}
            for k in range(1, t + 1):
                for c, k2 in M.contract_key(l + 2 * k - 1, l + 2 * k, key):
                    acc[k2] = acc.get(k2, 0) + coeffs[k - 1] * c
            cols.append(T2.project({k: v for k, v in acc.items() if v}))
        diffs[t] = RationalMatrix(T2.dim, T.dim, cols)

    def act(t, perm, vec):
        T = terms[t]
        full = tuple(perm) + tuple(range(l + 1, l + 2 * t + 1))
        out = {}
        for i, c in vec.items():
            s, k2 = M.act_key(full, T.basis[i])
            for j, v in T.project_key(k2).items():
                out[j] = out.get(j, 0) + c * s * v
        return {j: v for j, v in out.items() if v}

    return ChainComplex({t: T.dim for t, T in terms.items()}, diffs, -1, group_n=l, act=act,
                        meta={"side": "tor", "flavor": flavor, "legs": l, "x_max": x_max,
                              "module": M.name, "terms": terms, "method": "orbits"})


def tor_complex(M, flavor, l, x_max, oracle=False):
    """Tor-side Koszul complex at l legs, terms x = l, l+2, ..., x_max."""
    ub_tw = _check_flavor(M, flavor)
    terms = {}
    for x in range(l, x_max + 1, 2):
        if M.dim(x):
            terms[(x - l) // 2] = tor_term(M, flavor, l, x)
    diffs = {}
    for t, Q in terms.items():
        if t - 1 not in terms or Q.dim == 0:
            continue
        x = l + 2 * t
        Q2 = terms[t - 1]
        if oracle:
            coeffs = _tor_coefficients_oracle(l, t, ub_tw)
        else:
            coeffs = [(-1) ** (t - k) if ub_tw.order < 0 else 1 for k in range(1, t + 1)]
        cols = []
        for q in range(Q.dim):
            m = Q.lift(q)
            acc = {}
            for k in range(1, t + 1):
                c = coeffs[k - 1]
                if not c:
                    continue
                img = M.contract(x, l + 2 * k - 1, l + 2 * k, m)
                for r, v in img.items():
                    acc[r] = acc.get(r, 0) + c * v
            cols.append(Q2.project({r: v for r, v in acc.items() if v}))
        diffs[t] = RationalMatrix(Q2.dim, Q.dim, cols)

    def act(t, perm, vec):
        Q = terms[t]
        x = l + 2 * t
        full = tuple(perm) + tuple(range(l + 1, x + 1))
        out = {}
        for q, c in vec.items():
            for r, v in M.act(x, full, Q.lift(q)).items():
                out[r] = out.get(r, 0) + c * v
        return Q.project(out)

    dims = {t: Q.dim for t, Q in terms.items()}
    return ChainComplex(dims, diffs, -1, group_n=l, act=act,
                        meta={"side": "tor", "flavor": flavor, "legs": l, "x_max": x_max,
                              "module": M.name, "terms": terms})


def _tor_coefficients_oracle(l, t, tw):
    """Coefficient of e*_{f0} . d_ij on e*_{f0'} from brute-force composition."""
    x = l + 2 * t
    f0 = BrauerMorphism(l, x, identity(l), [(l + 2 * k + 1, l + 2 * k + 2) for k in range(t)])
    out = []
    for k in range(1, t + 1):
        i, j = l + 2 * k - 1, l + 2 * k
        d = degree_one(x, i, j)
        f0p = BrauerMorphism(l, x - 2, identity(l), [(l + 2 * q + 1, l + 2 * q + 2) for q in range(t - 1)])
        c = 0
        for f in hom_basis(l, x - 2):
            sg, h = compose_basis(d, f, tw)
            if h == f0:
                assert f == f0p
                c += sg
        out.append(c)
    return out


# ------------------------------------------------------ unit complexes

def unit_complex(U, X, side):
    """(db^# (x)_FB ub_tw)(U, X): basis = diagrams D in ub(X, U) with a subset R
    of chords marked red; d un-reds one chord.  side 'plus' pairs db with
    ub(+;-) (order signs on red chords), 'minus' pairs db(-;-) with ub(-;+)
    (order signs on black chords).  Degree r = |R|; the term sits at the
    object s = |X| + 2r."""
    if side not in ("plus", "minus"):
        raise ValueError("side must be 'plus' or 'minus'")
    if U < X or (U - X) % 2:
        return ChainComplex({}, {}, -1, group_n=X)
    Ds = hom_basis(X, U)
    tch = (U - X) // 2
    # degree r = number of red chords, i.e. s = X + 2r
    bases = {r: [(D, R) for D in Ds for R in itertools.combinations(range(tch), r)]
             for r in range(tch + 1)}
    index = {r: {k: i for i, k in enumerate(b)} for r, b in bases.items()}
    diffs = {}
    for r, b in bases.items():
        if r == 0:
            continue
        tgt = index[r - 1]
        cols = []
        for D, R in b:
            col = {}
            for pos, c in enumerate(R):
                if side == "plus":
                    sg = -1 if pos % 2 else 1
                else:
                    black_before = sum(1 for q in range(c) if q not in R)
                    sg = -1 if black_before % 2 else 1
                col[tgt[(D, R[:pos] + R[pos + 1:])]] = sg
            cols.append(col)
        diffs[r] = RationalMatrix(len(tgt), len(b), cols)

    def act(r, perm, vec):
        # Aut(X) acting through the source of D; chords are untouched
        out = {}
        idx = index[r]
        inv = {v: q + 1 for q, v in enumerate(perm)}
        for i, c in vec.items():
            D, R = bases[r][i]
            inj = tuple(D.injection[inv[q] - 1] for q in range(1, X + 1))
            out[idx[(BrauerMorphism(X, U, inj, D.chords), R)]] = c
        return out

    return ChainComplex({r: len(b) for r, b in bases.items()}, diffs, -1, group_n=X, act=act,
                        meta={"side": f"unit-{side}", "U": U, "X": X})


def unit_term_dimension(U, X, s):
    """dim db(U, s)^# (x)_{S_s} ub(X, s) = |ub(s, U)| |ub(X, s)| / s!."""
    from math import factorial
    return len(hom_basis(s, U)) * len(hom_basis(X, s)) // factorial(s)


# ------------------------------------------------------------ reports

@dataclass
class DegreeRow:
    degree: int
    arity: int
    chain_dim: int
    homology_dim: int | None = None
    decomposition: dict = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def to_json(self):
        d = {"degree": self.degree, "arity": self.arity, "chain_dim": self.chain_dim}
        if self.homology_dim is not None:
            d["homology_dim"] = self.homology_dim
        d["decomposition"] = {str(Partition(k)): v
                              for k, v in sorted(self.decomposition.items(), reverse=True)}
        d.update(self.extra)
        return d


@dataclass
class HomologyReport:
    command: str
    operad: str
    flavor: str
    side: str
    rows: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def to_json(self):
        from . import __version__
        return {
            "schema": SCHEMA,
            "command": self.command,
            "operad": self.operad,
            "flavor": self.flavor,
            "side": self.side,
            "params": self.params,
            "rows": [r.to_json() for r in self.rows],
            "checks": self.checks,
            "version": __version__,
        }

    def to_tsv(self):
        extras = []
        for r in self.rows:
            extras += [k for k in r.extra if k not in extras]
        lines = ["\t".join(["degree", "arity", "chain_dim", "homology_dim", "decomposition"] + extras)]
        for r in self.rows:
            dec = " + ".join(f"{v}*{Partition(k)}" for k, v in sorted(r.decomposition.items(), reverse=True))
            h = "" if r.homology_dim is None else str(r.homology_dim)
            cells = [str(r.degree), str(r.arity), str(r.chain_dim), h, dec]
            cells += [json.dumps(r.extra[k]) if k in r.extra else "" for k in extras]
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, sort_keys=False)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["schema", "command", "operad", "flavor", "side", "rows", "checks"],
    "properties": {
        "schema": {"const": SCHEMA},
        "command": {"type": "string"},
        "operad": {"type": "string"},
        "flavor": {"enum": ["even", "odd", "n/a"]},
        "side": {"type": "string"},
        "params": {"type": "object"},
        "checks": {"type": "object"},
        "version": {"type": "string"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["degree", "arity", "chain_dim", "decomposition"],
                "properties": {
                    "degree": {"type": "integer"},
                    "arity": {"type": "integer", "minimum": 0},
                    "chain_dim": {"type": "integer", "minimum": 0},
                    "homology_dim": {"type": "integer", "minimum": 0},
                    "decomposition": {
                        "type": "object",
                        "patternProperties": {r"^\((\d+(,\d+)*)?\)$": {"type": "integer", "minimum": 1}},
                        "additionalProperties": False,
                    },
                },
            },
        },
    },
}


def validate_report(doc):
    import jsonschema
    jsonschema.validate(doc, REPORT_SCHEMA)
    for r in doc["rows"]:
        tot = 0
        for k, v in r["decomposition"].items():
            tot += v * hook_dimension(Partition.parse(k))
        if r["decomposition"] and tot != r.get("homology_dim", r["chain_dim"]):
            raise ValueError("decomposition does not add up to the homology dimension")
    return True


def ext_report(M, flavor, max_arity, operad_name, decompose=True):
    rep = HomologyReport("ext", operad_name, flavor, "ext", params={"max_arity": max_arity})
    d2 = []
    for N in range(0, max_arity + 1):
        cx = ext_complex(M, flavor, N)
        if not cx.dims:
            continue
        d2 += [(N, k) for k in cx.check_d_squared()]
        decs = cx.decompose_all() if decompose else {}
        for s in cx.degrees:
            rep.rows.append(DegreeRow(s, N, cx.dims[s], cx.homology_dim(s), decs.get(s, {})))
    rep.checks["d_squared_zero"] = not d2
    if d2:
        raise InvariantViolation(f"d^2 != 0 at {d2}")
    return rep


def tor_report(M, flavor, legs, x_max, operad_name, decompose=True):
    """Rows for x = legs, ..., x_max.  The chains run one step further so
    that the top reported degree is not truncated."""
    rep = HomologyReport("tor", operad_name, flavor, "tor", params={"legs": legs, "x_max": x_max})
    cx = tor_complex_orbits(M, flavor, legs, x_max + 2)
    bad = cx.check_d_squared()
    rep.checks["d_squared_zero"] = not bad
    if bad:
        raise InvariantViolation(f"d^2 != 0 at {bad}")
    shown = [t for t in cx.degrees if legs + 2 * t <= x_max]
    decs = cx.decompose_all() if decompose else {}
    for t in shown:
        rep.rows.append(DegreeRow(t, legs + 2 * t, cx.dims[t], cx.homology_dim(t), decs.get(t, {})))
    rep.checks["acyclic"] = all(r.homology_dim == 0 for r in rep.rows)
    return rep
