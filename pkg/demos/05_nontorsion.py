"""The S_(2) and S_(3,3) classes of Ext^0 survive the canonical inclusions.

Run:  python3 demos/05_nontorsion.py
"""
from brkz.cyclic import OdotModule, get_operad
from brkz.koszul import nontorsion_check

M = OdotModule(get_operad("k-id"), "L")
for lam, d in [((2,), 1), ((2,), 2), ((3, 3), 1)]:
    dim, r = nontorsion_check(M, "even", lam, d)
    print(f"S{lam} pushed along i(2n, {d}): class dim {dim}, rank modulo coboundaries {r}")
