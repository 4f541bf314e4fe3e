"""Hairy graphs as a dimension oracle for the Tor side.

A graph has half-edges 1..x, legs at 1..l, internal edges matched as
(l+1, l+2), (l+3, l+4), ... and a surjection p onto its vertices.  Two such
graphs are isomorphic when a leg-fixing half-edge bijection preserving the
matching carries one vertex partition to the other; in normal position
these bijections form S_2 wr S_t acting on l+1..x.

Orientations are not re-derived here: a vertex decoration is a key of
L.(C) / S.(C) and automorphisms act through that module, with the twist
character of the wreath group on the edges.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cyclic import OdotModule
from .koszul import FLAVORS, _check_flavor
from .symrep import wreath_elements

GRAPH_CAP = 10


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class HairyGraph:
    x: int
    l: int
    p: tuple          # vertex (1-based) of each half-edge
    matching: tuple   # internal edges as pairs of half-edges
    legs: tuple = None
    aut_order: int = field(default=0, compare=False)

    def __post_init__(self):
        legs = self.legs if self.legs is not None else tuple(range(1, self.l + 1))
        object.__setattr__(self, "legs", tuple(legs))
        if (self.x - self.l) % 2:
            raise ValueError("x - l must be even")
        used = sorted(list(self.legs) + [h for e in self.matching for h in e])
        if used != list(range(1, self.x + 1)):
            raise ValueError("legs and matching must partition the half-edges")
        if len(self.p) != self.x or (self.x and sorted(set(self.p)) != list(range(1, max(self.p) + 1))):
            raise ValueError("p must be a surjection onto 1..v")

    @property
    def v(self):
        return max(self.p, default=0)

    @property
    def t(self):
        return (self.x - self.l) // 2

    def blocks(self):
        out = [[] for _ in range(self.v)]
        for h, vert in enumerate(self.p, 1):
            out[vert - 1].append(h)
        return [tuple(b) for b in out]

    def normal_position(self):
        """Relabel half-edges so legs are 1..l and edges are consecutive pairs."""
        order = list(self.legs)
        for a, b in self.matching:
            order.extend((a, b))
        new = {h: i + 1 for i, h in enumerate(order)}
        p = [0] * self.x
        for h in range(1, self.x + 1):
            p[new[h] - 1] = self.p[h - 1]
        return _relabel_vertices(tuple(p))

    def canonical(self):
        return canonical_form(self.normal_position(), self.l)

    def to_json(self):
        return {"x": self.x, "v": self.v, "l": self.l, "p": list(self.p),
                "matching": [list(e) for e in self.matching], "aut_order": self.aut_order}

    @classmethod
    def from_json(cls, d):
        return cls(d["x"], d["l"], tuple(d["p"]), tuple(tuple(e) for e in d["matching"]),
                   aut_order=d.get("aut_order", 0))


def _relabel_vertices(p):
    seen = {}
    return tuple(seen.setdefault(v, len(seen) + 1) for v in p)


@lru_cache(maxsize=None)
def leg_fixing_group(l, t):
    """S_2 wr S_t on l+1..l+2t as (permutation, wreath element) pairs."""
    out = []
    for w in wreath_elements(t):
        q = w.to_permutation()
        out.append((tuple(range(1, l + 1)) + tuple(l + i for i in q), w))
    return tuple(out)


def _push(p, g):
    """Vertex function after moving half-edge h to g(h)."""
    q = [0] * len(p)
    for h, vert in enumerate(p, 1):
        q[g[h - 1] - 1] = vert
    return _relabel_vertices(tuple(q))


def canonical_form(p, l):
    """Lexicographically least normalised p in the orbit, and |Aut|."""
    t = (len(p) - l) // 2
    imgs = [_push(p, g) for g, _ in leg_fixing_group(l, t)]
    return min(imgs), sum(1 for q in imgs if q == p)


def _set_partitions(n, sizes=None):
    def rec(i, blocks):
        if i > n:
            if sizes is None or all(len(b) in sizes for b in blocks):
                yield blocks
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()
    yield from rec(1, [])


def _to_p(blocks, n):
    p = [0] * n
    for k, b in enumerate(blocks, 1):
        for h in b:
            p[h - 1] = k
    return tuple(p)


def enumerate_graphs(x, v=None, l=0, arities=None, cap=GRAPH_CAP):
    """Isomorphism classes of graphs with x half-edges, l legs and (if given)
    v vertices, optionally restricted to vertex valences in ``arities``."""
    if x > cap:
        raise CapExceeded(f"x={x} exceeds the cap {cap}")
    if x < l or (x - l) % 2:
        return []
    t = (x - l) // 2
    sizes = None if arities is None else set(arities)
    matching = tuple((l + 2 * k + 1, l + 2 * k + 2) for k in range(t))
    found = {}
    for blocks in _set_partitions(x, sizes):
        if v is not None and len(blocks) != v:
            continue
        p = _to_p(blocks, x)
        c, _ = canonical_form(p, l)
        if c not in found:
            found[c] = canonical_form(c, l)[1]
    return [HairyGraph(x, l, c, matching, aut_order=a) for c, a in sorted(found.items())]


def contract_edge(G, pair):
    """Remove an internal edge and merge its endpoints.  Half-edges keep
    their relative order; the result is in canonical form."""
    pair = tuple(sorted(pair))
    if pair not in {tuple(sorted(e)) for e in G.matching}:
        raise ValueError(f"{pair} is not an internal edge")
    a, b = pair
    va, vb = G.p[a - 1], G.p[b - 1]
    keep = [h for h in range(1, G.x + 1) if h not in pair]
    new = {h: i + 1 for i, h in enumerate(keep)}
    p = tuple(va if G.p[h - 1] == vb else G.p[h - 1] for h in keep)
    if len(set(p)) < len({G.p[h - 1] for h in range(1, G.x + 1)}) - (va != vb):
        raise ValueError("contraction leaves an isolated vertex")
    legs = tuple(new[h] for h in G.legs)
    matching = tuple((new[c], new[d]) for c, d in G.matching if (c, d) != pair and (d, c) != pair)
    H = HairyGraph(G.x - 2, G.l, _relabel_vertices(p), matching, legs)
    c, aut = H.canonical()
    t = H.t
    return HairyGraph(H.x, H.l, c, tuple((H.l + 2 * k + 1, H.l + 2 * k + 2) for k in range(t)),
                      aut_order=aut)


def is_self_loop(G, pair):
    a, b = pair
    return G.p[a - 1] == G.p[b - 1]


def graph_term_dimension(C, flavor, x, l, cap=GRAPH_CAP):
    """Sum over graphs of dim (tensor of vertex decorations (x) orientation)_{Aut},
    by averaging characters over the automorphism group."""
    if x > cap:
        raise CapExceeded(f"x={x} exceeds the cap {cap}")
    if x < l or (x - l) % 2:
        return 0
    if flavor not in FLAVORS:
        raise ValueError(flavor)
    M = OdotModule(C, FLAVORS[flavor][2])
    tw = _check_flavor(M, flavor)
    arities = [k for k in range(1, x + 1) if C.dim(k)]
    t = (x - l) // 2
    total = 0
    for G in enumerate_graphs(x, None, l, arities, cap):
        blocks = G.blocks()
        keys = [tuple(zip(blocks, labs)) for labs in product(*(range(C.dim(len(b))) for b in blocks))]
        acc = Fraction(0)
        n_aut = 0
        for g, w in leg_fixing_group(l, t):
            if _push(G.p, g) != G.p:
                continue
            n_aut += 1
            chi = w.twist_character(tw)
            tr = 0
            for k in keys:
                s, k2 = M.act_key(g, k)
                if k2 == k:
                    tr += s
            acc += chi * tr
        dim = acc / n_aut
        if dim.denominator != 1:
            raise AssertionError("averaging gave a non-integer dimension")
        total += int(dim)
    return total


def graphs_to_json(graphs):
    return json.dumps([G.to_json() for G in graphs], indent=1)
