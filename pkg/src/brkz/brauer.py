"""Upward/downward Brauer categories with sign twists.

A morphism m -> n of ub is an injection m -> n together with a perfect
matching of the complement.  Standard form: chords (a, b) with a < b, sorted
by a.  The twist (direction; order) decides whether reversing a chord
and reordering chords cost a sign.  db(m, n) is ub(n, m) read backwards.

Text format (one morphism per line)::

    2->6 | 2 5 | (1-3) (4-6)

i.e. source, target, images of 1..m, then the chords.
"""
from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .symrep import MM, MP, PM, PP, Twist, compose, identity, inverse, sign

__all__ = ["BrauerMorphism", "TwistedElement", "Twist", "PP", "PM", "MP", "MM",
           "normalize", "compose_basis", "hom_basis", "matchings", "degree_one",
           "canonical_inclusion", "factorize", "act"]


class BrauerMorphism(tuple):
    """(source, target, injection, chords) in standard form."""

    def __new__(cls, m, n, injection, chords):
        injection = tuple(injection)
        chords = tuple(tuple(c) for c in chords)
        if len(injection) != m or (n - m) % 2 or n < m or len(chords) != (n - m) // 2:
            raise ValueError("bad shape")
        seen = set(injection)
        for a, b in chords:
            if not a < b:
                raise ValueError("chord not in standard form")
            seen.update((a, b))
        if seen != set(range(1, n + 1)) or len(injection) + 2 * len(chords) != n:
            raise ValueError("not an injection plus perfect matching of the complement")
        if list(chords) != sorted(chords):
            raise ValueError("chords not sorted")
        return super().__new__(cls, (m, n, injection, chords))

    m = property(lambda s: s[0])
    n = property(lambda s: s[1])
    injection = property(lambda s: s[2])
    chords = property(lambda s: s[3])

    def __repr__(self):
        return f"BrauerMorphism({self.to_ascii()!r})"

    def to_ascii(self):
        inj = " ".join(map(str, self.injection))
        ch = " ".join(f"({a}-{b})" for a, b in self.chords)
        return f"{self.m}->{self.n} | {inj} | {ch}".rstrip()

    @classmethod
    def from_ascii(cls, line):
        head, inj, ch = (line.split("|") + ["", ""])[:3]
        m, n = (int(x) for x in head.split("->"))
        injection = [int(x) for x in inj.split()]
        chords = [(int(a), int(b)) for a, b in re.findall(r"\((\d+)\s*-\s*(\d+)\)", ch)]
        s, f = normalize(m, n, injection, chords, PP)
        return f


def normalize(m, n, injection, chords, twist):
    """Standard form of a decorated morphism and the sign it costs."""
    s = 1
    fixed = []
    for a, b in chords:
        if a > b:
            a, b = b, a
            if twist.direction < 0:
                s = -s
        fixed.append((a, b))
    order = sorted(range(len(fixed)), key=lambda i: fixed[i][0])
    if twist.order < 0 and len(order) > 1:
        s *= sign(tuple(i + 1 for i in order))
    return s, BrauerMorphism(m, n, injection, [fixed[i] for i in order])


def compose_basis(g, f, twist):
    """g o f for basis morphisms f: m -> n, g: n -> p; returns (sign, h)."""
    if f.n != g.m:
        raise ValueError("not composable")
    inj = tuple(g.injection[i - 1] for i in f.injection)
    chords = [(g.injection[a - 1], g.injection[b - 1]) for a, b in f.chords] + list(g.chords)
    return normalize(f.m, g.n, inj, chords, twist)


def matchings(points):
    """Perfect matchings of a sorted sequence, in standard form."""
    points = tuple(points)
    if not points:
        yield ()
        return
    if len(points) % 2:
        return
    a = points[0]
    for k in range(1, len(points)):
        rest = points[1:k] + points[k + 1:]
        for m in matchings(rest):
            yield ((a, points[k]),) + m


def hom_basis(m, n):
    """Basis of ub(m, n) (equivalently db(n, m))."""
    if n < m or (n - m) % 2:
        return []
    out = []
    for inj in itertools.permutations(range(1, n + 1), m):
        rest = [x for x in range(1, n + 1) if x not in inj]
        for mt in matchings(rest):
            out.append(BrauerMorphism(m, n, inj, mt))
    return out


def degree_one(n, i, j):
    """d_ij in ub(n-2, n): order-preserving onto n minus {i, j}, chord (i, j)."""
    i, j = min(i, j), max(i, j)
    inj = [x for x in range(1, n + 1) if x not in (i, j)]
    return BrauerMorphism(n - 2, n, inj, [(i, j)])


def canonical_inclusion(N, d):
    """i_{N,d}: identity on 1..N plus chords (N+1, N+2), ..."""
    return BrauerMorphism(N, N + 2 * d, identity(N),
                          [(N + 2 * k + 1, N + 2 * k + 2) for k in range(d)])


def bijection(p):
    return BrauerMorphism(len(p), len(p), p, ())


class TwistedElement:
    """Linear combination of ub(m, n) basis morphisms in a twisted category."""

    def __init__(self, m, n, twist, terms=None):
        self.m, self.n, self.twist = m, n, Twist(*twist)
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, f, twist, coeff=1):
        return cls(f.m, f.n, twist, {f: coeff})

    @classmethod
    def decorated(cls, m, n, injection, chords, twist):
        s, f = normalize(m, n, injection, chords, twist)
        return cls(m, n, twist, {f: s})

    def __eq__(self, other):
        return (self.m, self.n, self.twist, self.terms) == (other.m, other.n, other.twist, other.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TwistedElement(self.m, self.n, self.twist, out)

    def scale(self, c):
        return TwistedElement(self.m, self.n, self.twist, {k: c * v for k, v in self.terms.items()})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        """self o other."""
        if self.twist != other.twist:
            raise ValueError("twist mismatch")
        out = {}
        for g, a in self.terms.items():
            for f, b in other.terms.items():
                s, h = compose_basis(g, f, self.twist)
                out[h] = out.get(h, 0) + s * a * b
        return TwistedElement(other.m, self.n, self.twist, out)

    def __repr__(self):
        body = " + ".join(f"{v}*[{k.to_ascii()}]" for k, v in sorted(self.terms.items()))
        return f"TwistedElement{str(self.twist)}({body or '0'})"


def act(perm, x, side="left"):
    """Left action sigma o x (sigma in S_n) or right action x o pi (pi in S_m)."""
    if side == "left":
        return TwistedElement.basis(bijection(perm), x.twist) @ x
    if side == "right":
        return x @ TwistedElement.basis(bijection(perm), x.twist)
    raise ValueError(side)


def db_act(perm, x, side="left"):
    """Actions on db(n, m) = ub(m, n) read backwards: alpha[g] = [g o alpha^-1]."""
    if side == "left":
        return act(inverse(perm), x, "right")
    return act(inverse(perm), x, "left")


def factorize(f, twist=PP):
    """Write f = c * sigma o d_1 o ... o d_t with degree-one d_k and a bijection
    sigma.  Returns (c, sigma, [d_1, ..., d_t])."""
    m, n = f.m, f.n
    steps = []
    cur = m
    for _ in f.chords:
        steps.append(degree_one(cur + 2, cur + 1, cur + 2))
        cur += 2
    # composite of the d's is the canonical inclusion; match f by a bijection
    # sending k -> injection(k) for k <= m and the k-th new chord onto f's k-th chord
    img = list(f.injection)
    for a, b in f.chords:
        img.extend((a, b))
    sigma = tuple(img)
    e = TwistedElement.basis(bijection(sigma), twist)
    chain = TwistedElement.basis(bijection(identity(m)), twist)
    for d in steps:
        chain = TwistedElement.basis(d, twist) @ chain
    g = e @ chain
    (h, c), = g.terms.items()
    if h != f:
        raise AssertionError("factorisation failed")
    return c, sigma, steps
