"""Tor side: hairy-graph complexes of unital operads are acyclic with legs.

Run:  python3 demos/04_tor_acyclicity.py
"""
import time

from brkz.cyclic import OdotModule, get_operad
from brkz.koszul import FLAVORS, tor_complex_orbits

for name in ("k-id", "qz2"):
    for flavor in ("even", "odd"):
        M = OdotModule(get_operad(name), FLAVORS[flavor][2])
        for legs in (0, 2):
            start = time.time()
            cx = tor_complex_orbits(M, flavor, legs, legs + 8)
            # the last term is a truncation, so read homology one step below it
            H = [cx.homology_dim(t) for t in cx.degrees][:-1]
            print(f"{name:5s} {flavor:4s} legs={legs}: dims {list(cx.dims.values())}  H {H}  "
                  f"({time.time() - start:.1f}s)")

# Without legs the complex is not acyclic: H_0 is the ground field, and more
# classes appear from wheels and theta-like graphs.
