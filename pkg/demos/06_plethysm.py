"""Induced sign twists from S_2 wr S_t, by characters and by Schur evaluation.

Run:  python3 demos/06_plethysm.py
"""
from brkz.schureval import plethysm_schur
from brkz.symrep import MM, MP, PM, PP, even_column_partitions, induced_decomposition, q1_partitions

for t in range(1, 5):
    for tw in (PP, PM, MP, MM):
        dec = induced_decomposition(t, tw)
        same = plethysm_schur(t, tw) == dec
        print(f"t={t} {tw}: {' + '.join(str(l) for l in dec)}   schur route agrees: {same}")

print("Q_1(8) =", q1_partitions(8))
print("even columns, 8 =", even_column_partitions(8))
