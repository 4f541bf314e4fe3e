"""The Ext-side Koszul complex for L.(k) and its Specht decomposition.

Run:  python3 demos/03_ext_worked_values.py
"""
from brkz.cyclic import OdotModule, get_operad
from brkz.koszul import ext_complex

M = OdotModule(get_operad("k-id"), "L")

for N in (2, 4, 6, 8):
    cx = ext_complex(M, "even", N)
    print(f"2n = {N}: chain dims {cx.dims}")
    for s, dec in sorted(cx.decompose_all().items()):
        if dec:
            body = " + ".join(f"{m}*S{lam}" for lam, m in sorted(dec.items(), reverse=True))
            print(f"    Ext^{s} = {body}")

# The odd flavor works with S.(k) and the ub twist (+;-).
S = OdotModule(get_operad("k-id"), "S")
print("odd flavor, 2n = 6, degree 2:", ext_complex(S, "odd", 6).decompose(2))
