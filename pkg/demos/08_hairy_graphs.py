"""Counting hairy graphs with orientations reproduces Tor term dimensions.

Run:  python3 demos/08_hairy_graphs.py
"""
from brkz.cyclic import OdotModule, get_operad
from brkz.hairy import contract_edge, enumerate_graphs, graph_term_dimension
from brkz.koszul import FLAVORS, tor_term

for G in enumerate_graphs(4, 2, 0, arities=[2]):
    print("x=4, two bivalent vertices:", G.to_json())

wheel = [G for G in enumerate_graphs(4, 2, 0, arities=[2]) if G.p == (1, 2, 1, 2)][0]
print("contract one edge of the wheel:", contract_edge(wheel, (1, 2)).to_json())

C = get_operad("com-ge3")
for flavor in ("even", "odd"):
    M = OdotModule(C, FLAVORS[flavor][2])
    for legs in (0, 1, 2):
        g = [graph_term_dimension(C, flavor, x, legs) for x in range(legs, 9, 2)]
        k = [tor_term(M, flavor, legs, x).dim for x in range(legs, 9, 2)]
        print(f"Com>=3 {flavor} legs={legs}: graphs {g}  koszul {k}")
