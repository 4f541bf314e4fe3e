"""Symmetric group representation theory.

Partitions, Murnaghan-Nakayama characters, Kostka numbers, the
hyperoctahedral group S_2 wr S_t with its four twist characters, and
isotypic projectors for explicit representations.

Permutations are tuples of 1-based images: ``p[i-1] = p(i)``.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple

from .exactla import RationalMatrix


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts if p)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, s):
        s = s.strip().strip("()[]")
        return cls(int(x) for x in s.split(",") if x.strip()) if s else cls()

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"Partition{str(self)}"

    def frobenius(self):
        r = sum(1 for i, p in enumerate(self) if p > i)
        c = self.conjugate()
        return tuple(self[i] - i - 1 for i in range(r)), tuple(c[i] - i - 1 for i in range(r))


def partitions(n, max_part=None):
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in partitions(n - k, k):
            yield Partition((k,) + rest)


def hook_dimension(lam):
    lam = Partition(lam)
    c = lam.conjugate()
    h = 1
    for i, row in enumerate(lam):
        for j in range(row):
            h *= row - j + c[j] - i - 1
    return factorial(lam.size) // h


# --------------------------------------------------------- permutations

def identity(n):
    return tuple(range(1, n + 1))


def compose(p, q):
    """p o q (apply q first)."""
    return tuple(p[x - 1] for x in q)


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return tuple(out)


def cycles(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if not seen[i]:
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = p[j] - 1
            out.append(tuple(cyc))
    return out


def cycle_type(p):
    return Partition(sorted((len(c) for c in cycles(p)), reverse=True))


def sign(p):
    return -1 if (len(p) - len(cycles(p))) % 2 else 1


def reduced_word(p):
    """Word [j1,...,jk] with p = s_j1 o ... o s_jk, s_j = (j j+1)."""
    a = list(p)
    swaps = []
    n = len(a)
    for i in range(n):
        for j in range(n - 1 - i):
            if a[j] > a[j + 1]:
                a[j], a[j + 1] = a[j + 1], a[j]
                swaps.append(j + 1)
    return swaps[::-1]


def cycle_type_representative(mu):
    out = []
    start = 1
    for m in mu:
        out.extend(range(start + 1, start + m))
        out.append(start)
        start += m
    return tuple(out)


def centralizer_order(mu):
    z = 1
    for k in set(mu):
        m = mu.count(k)
        z *= k ** m * factorial(m)
    return z


def class_size(mu):
    return factorial(sum(mu)) // centralizer_order(tuple(mu))


# ----------------------------------------------------------- characters

def _beta(lam, k):
    return tuple(lam[i] + k - 1 - i if i < len(lam) else k - 1 - i for i in range(k))


@lru_cache(maxsize=None)
def _mn(lam, mu):
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = _beta(lam, k)
    bset = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and (b - r) not in bset:
            ht = sum(1 for c in beta if b - r < c < b)
            nb = sorted((bset - {b}) | {b - r}, reverse=True)
            nl = tuple(x for x in (nb[i] - (k - 1 - i) for i in range(k)) if x)
            total += (-1) ** ht * _mn(nl, rest)
    return total


def character(lam, mu):
    """chi_lam at cycle type mu (Murnaghan-Nakayama rule)."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise ValueError("size mismatch")
    return _mn(tuple(lam), tuple(mu))


def character_table(n):
    parts = list(partitions(n))
    return parts, [[character(l, m) for m in parts] for l in parts]


def inner_product(f, g, n):
    """<f, g> for class functions given as {cycle type: value}."""
    s = Fraction(0)
    for mu in partitions(n):
        a, b = f.get(mu, 0), g.get(mu, 0)
        if a and b:
            s += Fraction(a * b, centralizer_order(mu))
    return s


def decompose_character(chi, n):
    """Multiplicities {lam: m} of a class function; raises if not a character."""
    out = {}
    for lam in partitions(n):
        m = inner_product(chi, {mu: character(lam, mu) for mu in partitions(n)}, n)
        if m.denominator != 1 or m < 0:
            raise ValueError(f"not a character: <chi, chi_{lam}> = {m}")
        if m:
            out[lam] = int(m)
    return out


def _horizontal_strips(lam, k):
    """Partitions nu with lam/nu a horizontal strip of size k."""
    out = []

    def rec(i, left, acc):
        if i == len(lam):
            if left == 0:
                out.append(tuple(x for x in acc if x))
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for take in range(min(left, lam[i] - lo) + 1):
            rec(i + 1, left - take, acc + (lam[i] - take,))

    rec(0, k, ())
    return out


@lru_cache(maxsize=None)
def _kostka(lam, mu):
    if not mu:
        return 1 if not lam else 0
    return sum(_kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def kostka(lam, mu):
    """Number of SSYT of shape lam and content mu."""
    return _kostka(tuple(Partition(lam)), tuple(mu))


def dominates(lam, mu):
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def schur_from_weights(weights, n):
    """Solve weight-space dims {mu: dim} = sum_lam m_lam K_{lam mu} for m."""
    out = {}
    for lam in partitions(n):  # reverse lex refines dominance
        d = weights.get(lam, 0) - sum(m * kostka(nu, lam) for nu, m in out.items())
        if d < 0:
            raise ValueError("weights are not a polynomial character")
        if d:
            out[lam] = d
    return out


# ------------------------------------------------------- wreath product

class Twist(NamedTuple):
    """Sign twist (direction; order); each entry +1 or -1."""
    direction: int
    order: int

    def __str__(self):
        s = {1: "+", -1: "-"}
        return f"({s[self.direction]};{s[self.order]})"

    @classmethod
    def parse(cls, s):
        t = s.strip().strip("()").replace(",", ";").split(";")
        m = {"+": 1, "-": -1}
        return cls(m[t[0].strip()], m[t[1].strip()])


PP = Twist(1, 1)
PM = Twist(1, -1)
MP = Twist(-1, 1)
MM = Twist(-1, -1)


class WreathElement(NamedTuple):
    """Element of S_2 wr S_t: flips (0/1 per block) and a block permutation."""
    flips: tuple
    block_perm: tuple

    @property
    def t(self):
        return len(self.block_perm)

    def to_permutation(self):
        out = [0] * (2 * self.t)
        for i, (f, b) in enumerate(zip(self.flips, self.block_perm)):
            for e in (0, 1):
                out[2 * i + e] = 2 * b - 1 + (e ^ f)
        return tuple(out)

    def __matmul__(self, other):
        """self o other."""
        perm = compose(self.block_perm, other.block_perm)
        flips = tuple(other.flips[i] ^ self.flips[other.block_perm[i] - 1] for i in range(self.t))
        return WreathElement(flips, perm)

    def twist_character(self, tw):
        v = 1
        if tw.direction < 0 and sum(self.flips) % 2:
            v = -v
        if tw.order < 0:
            v *= sign(self.block_perm)
        return v

    @classmethod
    def flip(cls, t, i):
        return cls(tuple(int(j == i) for j in range(1, t + 1)), identity(t))

    @classmethod
    def shuffle(cls, t, j):
        """Block permutation t -> j, order preserving elsewhere."""
        rest = [k for k in range(1, t + 1) if k != j]
        return cls((0,) * t, tuple(rest) + (j,))


def wreath_elements(t):
    for perm in itertools.permutations(range(1, t + 1)):
        for flips in itertools.product((0, 1), repeat=t):
            yield WreathElement(flips, perm)


WREATH_CAP = 7


@lru_cache(maxsize=None)
def _wreath_class_data(t, tw):
    if t > WREATH_CAP:
        raise OverflowError(f"wreath enumeration capped at t <= {WREATH_CAP}")
    data = {}
    for w in wreath_elements(t):
        key = tuple(cycle_type(w.to_permutation()))
        data[key] = data.get(key, 0) + w.twist_character(tw)
    return data


def induced_character(t, tw):
    """Class function of Ind_{S2 wr St}^{S2t} of the twist character."""
    n = 2 * t
    data = _wreath_class_data(t, tw)
    order = 2 ** t * factorial(t)
    # Frobenius: (Ind chi)(mu) = z_mu/|H| * sum_{h of type mu} chi(h)
    return {Partition(mu): Fraction(centralizer_order(mu) * s, order) for mu, s in data.items() if s}


def induced_multiplicity(lam, tw):
    """Multiplicity of S_lam in Ind_{S2 wr St}^{S2t} k_tw."""
    lam = Partition(lam)
    if lam.size % 2:
        return 0
    t = lam.size // 2
    data = _wreath_class_data(t, Twist(*tw))
    s = sum(character(lam, mu) * v for mu, v in data.items())
    m = Fraction(s, 2 ** t * factorial(t))
    assert m.denominator == 1
    return int(m)


def induced_decomposition(t, tw):
    return {lam: m for lam in partitions(2 * t) if (m := induced_multiplicity(lam, tw))}


def q1_partitions(n):
    """Partitions (a|b) in Frobenius notation with a_i = b_i + 1."""
    out = []
    for lam in partitions(n):
        a, b = lam.frobenius()
        if all(x == y + 1 for x, y in zip(a, b)):
            out.append(lam)
    return out


def even_column_partitions(n):
    return [l for l in partitions(n) if all(c % 2 == 0 for c in l.conjugate())]


def even_row_partitions(n):
    return [l for l in partitions(n) if all(c % 2 == 0 for c in l)]


# ------------------------------------------------------------ projector

def group_action_matrices(n, gens, limit=5040):
    """All (permutation, matrix) pairs generated from s_1..s_{n-1} matrices."""
    if factorial(n) > limit:
        raise OverflowError(f"S_{n} too large for explicit enumeration")
    dim = gens[0].nrows if gens else 1
    e = identity(n)
    out = {e: RationalMatrix.identity(dim)}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for j, S in enumerate(gens, 1):
                s = tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, n + 1))
                h = compose(s, g)
                if h not in out:
                    out[h] = S @ out[g]
                    nxt.append(h)
        frontier = nxt
    return out


def isotypic_projector(lam, gens):
    """Central idempotent dim(lam)/n! sum chi_lam(g) rho(g) for a
    representation given by its adjacent-transposition matrices."""
    lam = Partition(lam)
    n = lam.size
    elems = group_action_matrices(n, gens)
    dim = next(iter(elems.values())).nrows
    acc = RationalMatrix(dim, dim)
    for g, M in elems.items():
        c = character(lam, cycle_type(g))
        if c:
            acc = acc + M.scale(c)
    return acc.scale(Fraction(hook_dimension(lam), factorial(n)))
