"""Evaluation of FB-modules on a vector space, and the oracles that live on
the evaluated side.

* Schur functor dimensions  dim (V^{(x)n} (x) F(n))_{S_n}, by characters and
  directly by Young-subgroup coinvariants.
* The evaluated Koszul complex of L.(C) at (V, omega): basis = exterior
  (or symmetric) words in colored blocks, differential = sum over pairs of
  positions of omega(colour, colour) times the contraction.
* The Chevalley-Eilenberg complex of the Lie algebra C(V) with the
  Conant-Vogtmann bracket, built independently from the bracket.
* Symplectic invariants of V^{(x)n} from the Lie algebra action.
* Plethysm S^t(S^2) etc. by direct evaluation of W^{(x)2t} (x)_{S2 wr St} k_tw.
"""
from __future__ import annotations

import itertools
from collections import Counter
from math import factorial

from .exactla import RationalMatrix, rank
from .fbmod import Coinvariants
from .koszul import ChainComplex, FlavorMismatch
from .symrep import MM, PM, Partition, partitions, schur_from_weights


def schur_dimension(lam, dim_v):
    """dim S_lam(V) by the hook-content formula."""
    lam = Partition(lam)
    num = den = 1
    c = lam.conjugate()
    for i, row in enumerate(lam):
        for j in range(row):
            num *= dim_v + j - i
            den *= row - j + c[j] - i - 1
    return num // den


def schur_dim_character(F, n, dim_v):
    return sum(m * schur_dimension(lam, dim_v) for lam, m in F.decompose(n).items())


def _young_gens(mu, n):
    gens = []
    start = 1
    for part in mu:
        for j in range(start, start + part - 1):
            gens.append((tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1)), 1))
        start += part
    return gens


def schur_dim_direct(F, n, dim_v):
    """Sum over contents mu (compositions with <= dim_v parts) of dim F(n)_{S_mu}."""
    if F.dim(n) == 0:
        return 0
    total = 0
    cache = {}
    for comp in _compositions(n, dim_v):
        mu = tuple(sorted((c for c in comp if c), reverse=True))
        if mu not in cache:
            Q = Coinvariants(F.dim(n), lambda p, i: F.act(n, p, {i: 1}), _young_gens(mu, n))
            cache[mu] = Q.dim
        total += cache[mu]
    return total


def schur_evaluate(F, dim_v, max_degree):
    """{n: dim (V^{(x)n} (x) F(n))_{S_n}} for n <= max_degree; F is anything
    with ``dim(n)`` and ``act(n, perm, vec)`` (FB-modules, Day powers)."""
    return {n: d for n in range(max_degree + 1) if (d := schur_dim_direct(F, n, dim_v))}


def _compositions(n, k):
    if k == 0:
        if n == 0:
            yield ()
        return
    for a in range(n + 1):
        for rest in _compositions(n - a, k - 1):
            yield (a,) + rest


# ------------------------------------------------------------- forms

def symplectic_form(dim_v):
    if dim_v % 2:
        raise FlavorMismatch("a symplectic form needs even dim V")
    m = dim_v // 2

    def omega(a, b):
        if b == a + m and a < m:
            return 1
        if a == b + m and b < m:
            return -1
        return 0
    omega.kind = "symplectic"
    return omega


def symmetric_form(dim_v):
    def b(x, y):
        return 1 if x == y else 0
    b.kind = "symmetric"
    return b


# ---------------------------------------------------- colored blocks

class ColoredBlocks:
    """Basis of C(V) = sum_k (V^{(x)k} (x) C(k))_{S_k}: pairs (colour
    pattern, canonical label) with the orbit tables used to canonicalise."""

    def __init__(self, C, dim_v, max_arity):
        self.C = C
        self.dim_v = dim_v
        self.tables = {}
        self.blocks = []
        for k in range(1, max_arity + 1):
            if not C.dim(k):
                continue
            for pat in itertools.combinations_with_replacement(range(dim_v), k):
                tab = self._table(k, pat)
                for rep in sorted({v[0] for v in tab if v is not None}):
                    self.blocks.append((pat, rep))
        self.index = {b: i for i, b in enumerate(self.blocks)}

    def _table(self, k, pat):
        key = (k, pat)
        if key not in self.tables:
            C = self.C
            gens = []
            for j in range(1, k):
                if pat[j - 1] == pat[j]:
                    p = tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, k + 1))
                    gens.append((p, 1))

            def act(p, i):
                t, s = C.act(k, p, i)
                return {t: s}
            Q = Coinvariants(C.dim(k), act, gens)
            self.tables[key] = [None if Q._map[i] is None else (Q.reps[Q._map[i][0]], Q._map[i][1])
                                for i in range(C.dim(k))]
        return self.tables[key]

    def canon(self, pat, label):
        """(sign, block index) or None."""
        v = self._table(len(pat), pat)[label]
        if v is None:
            return None
        rep, s = v
        return s, self.index[(pat, rep)]

    def __len__(self):
        return len(self.blocks)

    def size(self, b):
        return len(self.blocks[b][0])


def _inv_sign(seq):
    s = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


# (-;-) modules evaluate on symplectic spaces, (+;-) modules on orthogonal ones
FORM_FOR_TWIST = {tuple(MM): "symplectic", tuple(PM): "symmetric"}


class EvaluatedComplex:
    """(V^{(x)N} (x) M(N))_{S_N} summed over N, for M = L.(C) or S.(C),
    with the contraction differential.  Degree = number of blocks."""

    def __init__(self, M, dim_v, form, max_arity):
        need = FORM_FOR_TWIST.get(tuple(M.twist))
        if need != form.kind:
            raise FlavorMismatch(f"a module over db{M.twist} cannot be evaluated on a {form.kind} form"
                                 + (f" (needs {need})" if need else ""))
        self.M = M
        self.form = form
        self.max_arity = max_arity
        self.cb = ColoredBlocks(M.C, dim_v, max_arity)
        self.L = M.flavor == "L"
        self.bases = {}
        self._build_bases()

    def _build_bases(self):
        nb = len(self.cb)
        sizes = [self.cb.size(b) for b in range(nb)]
        out = {}

        def rec(start, chosen, total):
            d = len(chosen)
            out.setdefault(d, []).append(tuple(chosen))
            for b in range(start, nb):
                if total + sizes[b] > self.max_arity:
                    continue
                chosen.append(b)
                rec(b + 1 if self.L else b, chosen, total + sizes[b])
                chosen.pop()

        rec(0, [], 0)
        self.bases = out
        self.index = {d: {k: i for i, k in enumerate(v)} for d, v in out.items()}

    def explicit(self, T):
        """(word, sign, key): the basis element T realised in M(N)."""
        cb = self.cb
        pats = [cb.blocks[b][0] for b in T]
        content = Counter(c for p in pats for c in p)
        word = []
        start = {}
        for c in sorted(content):
            start[c] = len(word) + 1
            word.extend([c] * content[c])
        nxt = dict(start)
        blocks = []
        for b in T:
            pat, lab = cb.blocks[b]
            pos = []
            for c in pat:
                pos.append(nxt[c])
                nxt[c] += 1
            blocks.append((tuple(sorted(pos)), lab))
        s = _inv_sign([B[0] for B, _ in blocks]) if self.L else 1
        blocks.sort(key=lambda x: x[0][0])
        return tuple(word), s, tuple(blocks)

    def canon(self, word, key):
        """(sign, T) for [word (x) key], or None when it vanishes."""
        s = 1
        ids = []
        for B, lab in key:
            pat = tuple(word[p - 1] for p in B)
            r = self.cb.canon(pat, lab)
            if r is None:
                return None
            s *= r[0]
            ids.append(r[1])
        if self.L:
            if len(set(ids)) < len(ids):
                return None
            s *= _inv_sign(ids)
        return s, tuple(sorted(ids))

    def differential(self, d):
        src = self.bases.get(d, [])
        tgt = self.index.get(d - 1)
        if not src or tgt is None:
            return None
        cols = []
        om = self.form
        for T in src:
            word, s0, key = self.explicit(T)
            N = len(word)
            col = {}
            for u in range(1, N + 1):
                for v in range(u + 1, N + 1):
                    w = om(word[u - 1], word[v - 1])
                    if not w:
                        continue
                    w2 = word[: u - 1] + word[u: v - 1] + word[v:]
                    for c, k2 in self.M.contract_key(u, v, key):
                        r = self.canon(w2, k2)
                        if r is None:
                            continue
                        j = tgt[r[1]]
                        col[j] = col.get(j, 0) + s0 * w * c * r[0]
            cols.append({j: x for j, x in col.items() if x})
        return RationalMatrix(len(tgt), len(src), cols)

    def complex(self):
        diffs = {}
        for d in self.bases:
            D = self.differential(d)
            if D is not None:
                diffs[d] = D
        return ChainComplex({d: len(b) for d, b in self.bases.items()}, diffs, -1,
                            meta={"side": "evaluated"})


def contraction_differential(M, dim_v, form=None, max_arity=None):
    if form is None:
        form = symmetric_form(dim_v) if tuple(M.twist) == tuple(PM) else symplectic_form(dim_v)
    if max_arity is None:
        max_arity = 2 * dim_v * dim_v
    return EvaluatedComplex(M, dim_v, form, max_arity).complex()


# ---------------------------------------------------- CE oracle side

class BracketAlgebra:
    """C(V) with the bracket [x, y] = sum omega(x_p, y_q) x o_{p,q} y."""

    def __init__(self, C, dim_v, form, max_arity):
        self.cb = ColoredBlocks(C, dim_v, max_arity)
        self.C = C
        self.form = form
        self.max_arity = max_arity
        n = len(self.cb)
        self.table = {}
        for a in range(n):
            for b in range(n):
                self.table[(a, b)] = self._bracket(a, b)

    @property
    def dim(self):
        return len(self.cb)

    def _bracket(self, a, b):
        (P, x), (Q, y) = self.cb.blocks[a], self.cb.blocks[b]
        k, l = len(P), len(Q)
        if k + l - 2 > self.max_arity:
            return {}
        U = tuple(range(1, k + 1))
        W = tuple(range(k + 1, k + l + 1))
        colour = dict(zip(U, P))
        colour.update(zip(W, Q))
        out = {}
        for p in U:
            for q in W:
                w = self.form(colour[p], colour[q])
                if not w:
                    continue
                Y, z = self.C.comp_sets(U, x, p, W, y, q)
                pat = tuple(colour[i] for i in Y)
                order = sorted(range(len(Y)), key=lambda i: (pat[i], i))
                # reorder positions so colours are sorted; relabel the label
                rank_of = {order[r]: r + 1 for r in range(len(Y))}
                rho = tuple(rank_of[i] for i in range(len(Y)))
                spat = tuple(pat[i] for i in order)
                for lab, c in z.items():
                    lab2, s = self.C.act(len(Y), rho, lab)
                    r = self.cb.canon(spat, lab2)
                    if r is None:
                        continue
                    out[r[1]] = out.get(r[1], 0) + w * c * s * r[0]
        return {k: v for k, v in out.items() if v}

    def bracket(self, a, b):
        return self.table[(a, b)]

    def check_jacobi(self):
        n = self.dim
        bad = []
        for a in range(n):
            for b in range(n):
                sym = {k: v + self.table[(b, a)].get(k, 0) for k, v in self.table[(a, b)].items()}
                for k, v in self.table[(b, a)].items():
                    sym.setdefault(k, v)
                if any(sym.values()):
                    bad.append(("antisymmetry", a, b))
                for c in range(b + 1, n):
                    acc = {}
                    for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                        for k, v in self.table[(y, z)].items():
                            for k2, v2 in self.table[(x, k)].items():
                                acc[k2] = acc.get(k2, 0) + v * v2
                    if any(acc.values()):
                        bad.append(("jacobi", a, b, c))
        return bad


def ce_complex(g):
    """Chevalley-Eilenberg chains Lambda^k g with d(x1..xk) =
    sum_{i<j} (-1)^{i+j} [xi, xj] x1..^i..^j..xk."""
    n = g.dim
    bases = {k: list(itertools.combinations(range(n), k)) for k in range(n + 1)}
    index = {k: {t: i for i, t in enumerate(b)} for k, b in bases.items()}
    diffs = {}
    for k in range(2, n + 1):
        tgt = index[k - 1]
        cols = []
        for T in bases[k]:
            col = {}
            for i in range(k):
                for j in range(i + 1, k):
                    br = g.bracket(T[i], T[j])
                    if not br:
                        continue
                    rest = T[:i] + T[i + 1: j] + T[j + 1:]
                    sg0 = -1 if (i + j) % 2 else 1
                    for e, c in br.items():
                        if e in rest:
                            continue
                        seq = (e,) + rest
                        s = _inv_sign(seq)
                        r = tgt[tuple(sorted(seq))]
                        col[r] = col.get(r, 0) + sg0 * s * c
            cols.append({r: v for r, v in col.items() if v})
        diffs[k] = RationalMatrix(len(tgt), len(bases[k]), cols)
    return ChainComplex({k: len(b) for k, b in bases.items()}, diffs, -1, meta={"side": "ce"})


def ce_compare(C, dim_v):
    """Degreewise chain and homology dimensions of the evaluated Koszul
    complex of L.(C) and of the CE complex of C(V), for C = (B, sigma)."""
    from .cyclic import AlgebraOperad, OdotModule
    if not isinstance(C, AlgebraOperad):
        raise FlavorMismatch("the CE comparison is set up for operads (B, sigma)")
    form = symplectic_form(dim_v)
    g = BracketAlgebra(C, dim_v, form, 2)
    jac = g.check_jacobi()
    if jac:
        raise ValueError(f"bracket fails {jac[0]}")
    ce = ce_complex(g)
    ev = contraction_differential(OdotModule(C, "L"), dim_v, form, max_arity=2 * g.dim)
    out = {"lie_dim": g.dim, "degrees": []}
    for k in sorted(set(ce.dims) | set(ev.dims)):
        out["degrees"].append({
            "degree": k,
            "ce_dim": ce.dims.get(k, 0), "koszul_dim": ev.dims.get(k, 0),
            "ce_homology": ce.homology_dim(k) if k in ce.dims else 0,
            "koszul_homology": ev.homology_dim(k) if k in ev.dims else 0,
        })
    out["d_squared_zero"] = not ce.check_d_squared() and not ev.check_d_squared()
    out["match"] = all(r["ce_dim"] == r["koszul_dim"] and r["ce_homology"] == r["koszul_homology"]
                       for r in out["degrees"])
    return out


# ---------------------------------------------------- invariant theory

def sp_generators(dim_v):
    """Simple root vectors E_i, F_i of sp(V) for omega(e_i, e_{i+m}) = 1, as
    sparse matrices {(row, col): value} acting on V."""
    m = dim_v // 2
    E, F = [], []
    for i in range(m - 1):
        # e_{i+1} -> e_i on the first half, compensated on the second half
        E.append({(i, i + 1): 1, (m + i + 1, m + i): -1})
        F.append({(i + 1, i): 1, (m + i, m + i + 1): -1})
    # long root: e_{2m} -> e_m
    E.append({(m - 1, 2 * m - 1): 1})
    F.append({(2 * m - 1, m - 1): 1})
    return E + F


def _check_sp(X, dim_v):
    m = dim_v // 2
    om = symplectic_form(dim_v)
    for a in range(dim_v):
        for b in range(dim_v):
            s = sum(v * om(r, b) for (r, c), v in X.items() if c == a)
            s += sum(v * om(a, r) for (r, c), v in X.items() if c == b)
            if s:
                return False
    return True


def symplectic_invariants(dim_v, n):
    """dim (V^{(x)n})^{Sp(V)}: weight-zero words killed by the simple root
    vectors, which generate sp(V)."""
    if dim_v % 2:
        raise FlavorMismatch("symplectic invariants need even dim V")
    m = dim_v // 2
    gens = sp_generators(dim_v)
    assert all(_check_sp(X, dim_v) for X in gens)
    if n % 2:
        return 0
    words = [w for w in itertools.product(range(dim_v), repeat=n)
             if all(w.count(i) == w.count(i + m) for i in range(m))]
    index = {w: i for i, w in enumerate(words)}
    # stack all generator actions on the weight-zero space
    cols = []
    out_index = {}
    for w in words:
        col = {}
        for g, X in enumerate(gens):
            for pos in range(n):
                for (r, c), v in X.items():
                    if c == w[pos]:
                        w2 = w[:pos] + (r,) + w[pos + 1:]
                        key = (g, w2)
                        if key not in out_index:
                            out_index[key] = len(out_index)
                        j = out_index[key]
                        col[j] = col.get(j, 0) + v
        cols.append({j: v for j, v in col.items() if v})
    A = RationalMatrix(len(out_index), len(words), cols)
    return len(words) - rank(A)


def double_factorial(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


# ------------------------------------------------------------ plethysm

def plethysm_weights(t, tw, dim_w=None):
    """Weight multiplicities of W^{(x)2t} (x)_{S2 wr St} k_tw for dominant
    weights mu |- 2t (dim W >= 2t so every weight appears)."""
    from .koszul import stabilizer_generators
    n = 2 * t
    gens = stabilizer_generators(0, t, tw)
    out = {}
    for mu in partitions(n):
        letters = [c for c, k in enumerate(mu) for _ in range(k)]
        words = sorted(set(itertools.permutations(letters)))
        idx = {w: i for i, w in enumerate(words)}

        def act(p, i):
            w = words[i]
            w2 = [0] * n
            for pos, c in enumerate(w):
                w2[p[pos] - 1] = c
            return {idx[tuple(w2)]: 1}
        out[mu] = Coinvariants(len(words), act, gens).dim
    return out


def plethysm_schur(t, tw):
    """Decomposition of Ind_{S2 wr St}^{S2t} k_tw from direct Schur evaluation."""
    return schur_from_weights(plethysm_weights(t, tw), 2 * t)
