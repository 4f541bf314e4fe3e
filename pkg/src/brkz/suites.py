"""Invariant suites behind ``brkz verify``.

Each suite takes a size bound and returns a list of ``Check`` records; a
suite passes when every record does.  The first failing record carries
enough data to reproduce the instance.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

from .cyclic import OdotModule, get_operad
from .hairy import graph_term_dimension
from .koszul import (FLAVORS, ext_complex, tor_complex, tor_term, unit_complex,
                     unit_term_dimension)
from .schureval import ce_compare, plethysm_schur
from .symrep import (MP, PM, even_column_partitions, induced_decomposition,
                     q1_partitions)


@dataclass
class Check:
    suite: str
    instance: dict
    ok: bool
    data: dict = field(default_factory=dict)


def _module(name, flavor):
    return OdotModule(get_operad(name), FLAVORS[flavor][2])


def suite_d_squared(size):
    out = []
    for name in ("k-id", "qz2"):
        for fl in FLAVORS:
            M = _module(name, fl)
            for N in range(0, size + 1, 2):
                bad = ext_complex(M, fl, N).check_d_squared()
                out.append(Check("d_squared", {"side": "ext", "operad": name, "flavor": fl, "N": N},
                                 not bad, {"failing_degrees": bad}))
            for l in range(0, 3):
                bad = tor_complex(M, fl, l, size).check_d_squared()
                out.append(Check("d_squared", {"side": "tor", "operad": name, "flavor": fl, "legs": l},
                                 not bad, {"failing_degrees": bad}))
    return out


def suite_oracle(size):
    """Sign-formula differentials against brute-force diagram composition."""
    out = []
    for name in ("k-id", "qz2"):
        for fl in FLAVORS:
            M = _module(name, fl)
            for N in range(0, size + 1, 2):
                a, b = ext_complex(M, fl, N), ext_complex(M, fl, N, oracle=True)
                same = a.diffs.keys() == b.diffs.keys() and all(a.diffs[k] == b.diffs[k] for k in a.diffs)
                out.append(Check("oracle", {"side": "ext", "operad": name, "flavor": fl, "N": N}, same))
            for l in range(0, 3):
                a, b = tor_complex(M, fl, l, size), tor_complex(M, fl, l, size, oracle=True)
                same = a.diffs.keys() == b.diffs.keys() and all(a.diffs[k] == b.diffs[k] for k in a.diffs)
                out.append(Check("oracle", {"side": "tor", "operad": name, "flavor": fl, "legs": l}, same))
    return out


def suite_koszulness(size):
    out = []
    for side in ("plus", "minus"):
        for X in range(0, size + 1):
            for U in range(X, size + 1, 2):
                cx = unit_complex(U, X, side)
                H = {r: cx.homology_dim(r) for r in cx.degrees}
                dims_ok = all(cx.dims[r] == unit_term_dimension(U, X, X + 2 * r) for r in cx.degrees)
                if U == X:
                    ok = H == {0: factorial(X)}
                else:
                    ok = not any(H.values())
                out.append(Check("koszulness", {"U": U, "X": X, "side": side}, ok and dims_ok,
                                 {"homology": H, "dims": cx.dims}))
    return out


def suite_acyclicity(size):
    out = []
    for name in ("k-id", "qz2"):
        for fl in FLAVORS:
            M = _module(name, fl)
            for l in range(1, 5):
                if l > size:
                    continue
                cx = tor_complex(M, fl, l, size + 2)
                H = {l + 2 * t: cx.homology_dim(t) for t in cx.degrees if l + 2 * t <= size}
                out.append(Check("acyclicity", {"operad": name, "flavor": fl, "legs": l, "x_max": size},
                                 not any(H.values()), {"homology_by_x": H}))
    return out


def suite_ce(size):
    out = []
    for name in ("k-id", "dual"):
        r = ce_compare(get_operad(name), 2)
        out.append(Check("ce", {"operad": name, "dim_v": 2}, r["match"] and r["d_squared_zero"],
                         {"degrees": r["degrees"]}))
    return out


def suite_plethysm(size):
    out = []
    for n2 in range(2, size + 1, 2):
        t = n2 // 2
        a = induced_decomposition(t, PM)
        b = induced_decomposition(t, MP)
        out.append(Check("plethysm", {"2n": n2, "twist": "(+;-)", "method": "characters"},
                         sorted(a) == sorted(q1_partitions(n2)) and set(a.values()) <= {1}))
        out.append(Check("plethysm", {"2n": n2, "twist": "(-;+)", "method": "characters"},
                         sorted(b) == sorted(even_column_partitions(n2)) and set(b.values()) <= {1}))
        if n2 <= 8:
            out.append(Check("plethysm", {"2n": n2, "twist": "(+;-)", "method": "schur"},
                             plethysm_schur(t, PM) == a))
            out.append(Check("plethysm", {"2n": n2, "twist": "(-;+)", "method": "schur"},
                             plethysm_schur(t, MP) == b))
    return out


def suite_hairy(size):
    out = []
    for name in ("k-id", "qz2", "com-ge3"):
        C = get_operad(name)
        for fl in FLAVORS:
            M = OdotModule(C, FLAVORS[fl][2])
            for l in range(0, 5):
                for x in range(l, size + 1, 2):
                    g, k = graph_term_dimension(C, fl, x, l), tor_term(M, fl, l, x).dim
                    out.append(Check("hairy", {"operad": name, "flavor": fl, "legs": l, "x": x},
                                     g == k, {"graphs": g, "koszul": k}))
    return out


SUITES = {
    "d_squared": suite_d_squared,
    "oracle": suite_oracle,
    "koszulness": suite_koszulness,
    "acyclicity": suite_acyclicity,
    "ce": suite_ce,
    "plethysm": suite_plethysm,
    "hairy": suite_hairy,
}


def run_suites(size, names=None):
    """[(name, passed, seconds, checks)] in a fixed order."""
    rows = []
    for name in names or SUITES:
        t0 = time.perf_counter()
        checks = SUITES[name](size)
        rows.append((name, all(c.ok for c in checks), time.perf_counter() - t0, checks))
    return rows
