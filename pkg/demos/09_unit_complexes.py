"""Koszulness: the unit complexes (U, X) are acyclic unless U = X.

Run:  python3 demos/09_unit_complexes.py
"""
from brkz.koszul import unit_complex

for side in ("plus", "minus"):
    for X in range(0, 4):
        for U in range(X, 7, 2):
            cx = unit_complex(U, X, side)
            H = [cx.homology_dim(r) for r in cx.degrees]
            print(f"{side:5s} U={U} X={X}: dims {list(cx.dims.values())}  H {H}")
