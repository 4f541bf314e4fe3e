"""Evaluating on a symplectic space: the Chevalley-Eilenberg complex of sp(V)
and the dimension of Sp-invariant tensors.

Run:  python3 demos/07_ce_and_invariants.py
"""
from brkz.cyclic import get_operad
from brkz.schureval import ce_compare, symplectic_invariants

for name, dim_v in [("k-id", 2), ("dual", 2), ("qz2", 2), ("k-id", 4)]:
    r = ce_compare(get_operad(name), dim_v)
    rows = r["degrees"]
    print(f"{name} at dim V={dim_v}: Lie algebra of dim {r['lie_dim']}")
    print("   chains  ", [d["ce_dim"] for d in rows])
    print("   homology", [d["ce_homology"] for d in rows], " Koszul side matches:", r["match"])

for dim_v in (2, 4, 6):
    print(f"dim (V^n)^Sp, dim V = {dim_v}:", [symplectic_invariants(dim_v, n) for n in range(7)])
