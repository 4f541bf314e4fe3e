"""Chord diagrams in the twisted upward Brauer category.

Run:  python3 demos/01_brauer_diagrams.py
"""
from brkz.brauer import MM, MP, PM, PP, BrauerMorphism, TwistedElement, canonical_inclusion, degree_one, hom_basis

# A morphism 2 -> 6: where 1 and 2 go, then the chords on what is left.
f = BrauerMorphism.from_ascii("2->6 | 2 5 | (1-3) (4-6)")
print("f        =", f.to_ascii())

# Hom counts grow like (n choose m) * m! * (n-m-1)!!
for m, n in [(0, 2), (0, 4), (2, 4), (0, 6), (2, 6)]:
    print(f"|ub({m},{n})| = {len(hom_basis(m, n))}")

# Composing inserts chords.  Whether a reversed or reordered chord costs a
# sign depends on the twist (direction; order).
d = degree_one(4, 3, 1)
i = canonical_inclusion(0, 1)
for tw in (PP, PM, MP, MM):
    prod = TwistedElement.basis(d, tw) @ TwistedElement.basis(i, tw)
    print(f"twist {tw}:  d_13 o i_(0,1) = {prod}")

# The same decorated diagram read in the four categories.
for tw in (PP, PM, MP, MM):
    x = TwistedElement.decorated(0, 4, (), [(4, 3), (2, 1)], tw)
    print(f"{tw}: chords (4-3)(2-1) -> {x}")
