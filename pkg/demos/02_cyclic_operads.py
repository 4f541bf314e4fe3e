"""Cyclic operads from algebras with involution, and their Day powers.

Run:  python3 demos/02_cyclic_operads.py
"""
from brkz.cyclic import AlgebraOperad, OdotModule, check_axioms, check_module, get_operad

# Built-ins: k with the identity, Q[Z/2], dual numbers, M_2 with transpose, Com>=3.
for name in ("k-id", "qz2", "dual", "mat2-t", "com-ge3"):
    C = get_operad(name)
    print(f"{name:8s} dims {[C.dim(n) for n in range(7)]}  axiom failures: {len(check_axioms(C, 5))}")

# A user algebra: Q x Q with the swap involution.
swap = AlgebraOperad([[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [[0, 1], [1, 0]], name="QxQ-swap")
print("QxQ with swap, sigma eigenvalues:", swap.eigen)

# L.(C) is a module over db with twist (-;-), S.(C) over the plain db.
L = OdotModule(get_operad("k-id"), "L")
print("dim L.(k)(N), N = 0..8:", [L.dim(N) for N in range(9)])
S = OdotModule(get_operad("qz2"), "S")
print("dim S.(Q[Z/2])(N), N = 0..8:", [S.dim(N) for N in range(9)])

# The degree-one generators satisfy the quadratic relations of the twisted db.
print("module relation failures at N = 6:", len(check_module(L, 6)), len(check_module(S, 6)))
