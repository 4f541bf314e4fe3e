import json

import pytest

from brkz.cyclic import OdotModule, get_operad
from brkz.hairy import (CapExceeded, HairyGraph, contract_edge, enumerate_graphs,
                        graph_term_dimension, is_self_loop)
from brkz.koszul import tor_term


def test_single_string():
    (G,) = enumerate_graphs(2, 1, 2)
    assert G.blocks() == [(1, 2)] and G.aut_order == 1


def test_two_bivalent_vertices_without_legs():
    gs = enumerate_graphs(4, 2, 0, arities=[2])
    # the 2-edge wheel and a pair of tadpoles
    wheel = [g for g in gs if g.p == (1, 2, 1, 2)]
    assert len(gs) == 2 and wheel and wheel[0].aut_order == 4


def test_string_with_two_vertices():
    gs = enumerate_graphs(4, 2, 2, arities=[2])
    assert any(g.p == (1, 2, 1, 2) for g in gs)


def test_contractions():
    string = HairyGraph(4, 2, (1, 2, 1, 2), ((3, 4),))
    merged = contract_edge(string, (3, 4))
    assert merged.v == 1 and merged.x == 2
    wheel = HairyGraph(4, 0, (1, 2, 1, 2), ((1, 2), (3, 4)))
    one = contract_edge(wheel, (1, 2))
    assert one.v == 1 and is_self_loop(one, one.matching[0])
    with pytest.raises(ValueError):
        contract_edge(one, one.matching[0])


def test_contraction_order_does_not_matter():
    for G in enumerate_graphs(8, None, 2, arities=[2, 3, 4]):
        edges = list(G.matching)
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if is_self_loop(G, edges[i]) or is_self_loop(G, edges[j]):
                    continue
                try:
                    a = contract_edge(G, edges[i])
                    b = contract_edge(G, edges[j])
                except ValueError:
                    continue
                # locate the surviving copy of the other edge by relabelling
                ea = _image(G, edges[i], edges[j])
                eb = _image(G, edges[j], edges[i])
                try:
                    ab = contract_edge(_graph_before_canon(G, edges[i]), ea)
                    ba = contract_edge(_graph_before_canon(G, edges[j]), eb)
                except ValueError:
                    continue
                assert ab.p == ba.p


def _image(G, removed, e):
    keep = [h for h in range(1, G.x + 1) if h not in removed]
    new = {h: k + 1 for k, h in enumerate(keep)}
    return (new[e[0]], new[e[1]])


def _graph_before_canon(G, pair):
    a, b = pair
    keep = [h for h in range(1, G.x + 1) if h not in pair]
    new = {h: k + 1 for k, h in enumerate(keep)}
    va, vb = G.p[a - 1], G.p[b - 1]
    seen = {}
    p = tuple(seen.setdefault(va if G.p[h - 1] == vb else G.p[h - 1], len(seen) + 1) for h in keep)
    matching = tuple((new[c], new[d]) for c, d in G.matching if (c, d) != pair)
    return HairyGraph(G.x - 2, G.l, p, matching, tuple(new[h] for h in G.legs))


def test_automorphism_orders_divide_the_wreath_order():
    for x in range(2, 9, 2):
        for G in enumerate_graphs(x, None, 0):
            t = G.t
            order = 2 ** t
            for k in range(2, t + 1):
                order *= k
            assert order % G.aut_order == 0


def test_term_dimension_examples():
    C = get_operad("k-id")
    assert graph_term_dimension(C, "even", 4, 0) == 0
    assert graph_term_dimension(C, "even", 2, 2) == 1
    assert graph_term_dimension(C, "even", 3, 0) == 0


@pytest.mark.parametrize("name", ["k-id", "qz2", "com-ge3"])
@pytest.mark.parametrize("flavor,power", [("even", "L"), ("odd", "S")])
def test_oracle_small(name, flavor, power):
    C = get_operad(name)
    M = OdotModule(C, power)
    for l in range(3):
        for x in range(l, 7, 2):
            assert graph_term_dimension(C, flavor, x, l) == tor_term(M, flavor, l, x).dim


def test_json_and_caps():
    G = enumerate_graphs(4, 2, 2)[0]
    assert HairyGraph.from_json(json.loads(json.dumps(G.to_json()))) == G
    with pytest.raises(CapExceeded):
        enumerate_graphs(12, None, 0)
