"""Command line entry point: ``brkz <command> ...`` (or ``python3 -m brkz``).

Exit codes: 0 ok, 2 validation failure, 3 invariant failure, 4 cap exceeded.
Reports are JSON (schema brkz-report/1) or a TSV mirror.
"""
from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from math import factorial
from pathlib import Path

import click

from .cyclic import BUILTIN_OPERADS, AlgebraOperad, OdotModule, OperadError, get_operad, operad_from_json
from .hairy import enumerate_graphs, graph_term_dimension, graphs_to_json
from .koszul import (FLAVORS, DegreeRow, FlavorMismatch, HomologyReport, InvariantViolation,
                     ext_complex, ext_report, nontorsion_check, tor_report, tor_term,
                     unit_complex, validate_report)
from .schureval import ColoredBlocks, ce_compare, plethysm_schur
from .symrep import (MP, PM, Partition, Twist, even_column_partitions, hook_dimension,
                     induced_decomposition, q1_partitions)

EXIT_OK, EXIT_VALIDATION, EXIT_INVARIANT, EXIT_CAP = 0, 2, 3, 4

# soft caps apply unless --allow-large; hard caps always
SOFT_ARITY, HARD_ARITY = 10, 14
CE_LIE_CAP = 12


class Fail(click.ClickException):
    def __init__(self, message, code):
        super().__init__(message)
        self.exit_code = code


def load_operad(spec):
    """Builtin name or path to an Operad JSON document."""
    try:
        if spec in BUILTIN_OPERADS:
            return get_operad(spec)
        path = Path(spec)
        if not path.exists():
            raise OperadError(f"{spec!r} is neither a builtin ({', '.join(sorted(BUILTIN_OPERADS))}) nor a file")
        return operad_from_json(json.loads(path.read_text()))
    except (OperadError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise Fail(f"operad {spec}: {e}", EXIT_VALIDATION) from None


def check_cap(value, what, allow_large):
    if value > HARD_ARITY or (value > SOFT_ARITY and not allow_large):
        raise Fail(f"{what}={value} exceeds the cap ({SOFT_ARITY}; hard limit {HARD_ARITY})", EXIT_CAP)


def emit(report, fmt, output):
    doc = report.to_json()
    validate_report(doc)
    text = report.dumps() + "\n" if fmt == "json" else report.to_tsv()
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text, nl=False)


def _jobs(jobs):
    if jobs is None:
        jobs = int(os.environ.get("BRKZ_JOBS", "1"))
    return max(1, jobs)


operad_opt = click.option("--operad", default="k-id", show_default=True,
                          help="builtin name or path to an operad JSON file")
flavor_opt = click.option("--flavor", type=click.Choice(sorted(FLAVORS)), default="even", show_default=True)
format_opt = click.option("--format", "fmt", type=click.Choice(["json", "tsv"]), default="json", show_default=True)
output_opt = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None)
large_opt = click.option("--allow-large", is_flag=True, help=f"lift the soft cap to {HARD_ARITY}")


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Exact computations with twisted Brauer categories and Koszul complexes."""


def _ext_rows(args):
    name, flavor, N, decompose = args
    M = OdotModule(load_operad(name), FLAVORS[flavor][2])
    cx = ext_complex(M, flavor, N)
    if not cx.dims:
        return N, [], []
    bad = cx.check_d_squared()
    decs = cx.decompose_all() if decompose else {}
    return N, [DegreeRow(s, N, cx.dims[s], cx.homology_dim(s), decs.get(s, {})) for s in cx.degrees], bad


@main.command()
@operad_opt
@flavor_opt
@click.option("--max-arity", default=6, show_default=True, help="largest 2n")
@click.option("--no-decompose", is_flag=True, help="skip the Specht decomposition")
@click.option("--jobs", type=int, default=None, help="worker processes (env BRKZ_JOBS)")
@large_opt
@format_opt
@output_opt
def ext(operad, flavor, max_arity, no_decompose, jobs, allow_large, fmt, output):
    """Ext-side complexes at every object 2n <= MAX_ARITY."""
    check_cap(max_arity, "max-arity", allow_large)
    C = load_operad(operad)
    M = OdotModule(C, FLAVORS[flavor][2])
    jobs = _jobs(jobs)
    try:
        if jobs == 1:
            rep = ext_report(M, flavor, max_arity, C.name, decompose=not no_decompose)
        else:
            rep = HomologyReport("ext", C.name, flavor, "ext", params={"max_arity": max_arity})
            tasks = [(operad, flavor, N, not no_decompose) for N in range(max_arity + 1)]
            with ProcessPoolExecutor(jobs) as pool:
                results = sorted(pool.map(_ext_rows, tasks), key=lambda r: r[0])
            bad = [(N, k) for N, _, b in results for k in b]
            if bad:
                raise InvariantViolation(f"d^2 != 0 at {bad}")
            for _, rows, _ in results:
                rep.rows.extend(rows)
            rep.checks["d_squared_zero"] = True
    except FlavorMismatch as e:
        raise Fail(str(e), EXIT_VALIDATION) from None
    except InvariantViolation as e:
        raise Fail(str(e), EXIT_INVARIANT) from None
    emit(rep, fmt, output)


@main.command()
@operad_opt
@flavor_opt
@click.option("--legs", default=2, show_default=True)
@click.option("--max-x", default=8, show_default=True, help="largest reported arity x = legs + 2t")
@click.option("--no-decompose", is_flag=True)
@large_opt
@format_opt
@output_opt
def tor(operad, flavor, legs, max_x, no_decompose, allow_large, fmt, output):
    """Tor-side complex at LEGS legs.  Chains are built one step past MAX_X."""
    check_cap(max_x + 2, "max-x + 2", allow_large)
    if legs < 0 or legs > max_x:
        raise Fail("need 0 <= legs <= max-x", EXIT_VALIDATION)
    C = load_operad(operad)
    try:
        rep = tor_report(OdotModule(C, FLAVORS[flavor][2]), flavor, legs, max_x, C.name,
                         decompose=not no_decompose)
    except InvariantViolation as e:
        raise Fail(str(e), EXIT_INVARIANT) from None
    emit(rep, fmt, output)


@main.command()
@operad_opt
@flavor_opt
@click.option("--legs", default=0, show_default=True)
@click.option("--max-x", default=8, show_default=True)
@click.option("--graphs-out", type=click.Path(dir_okay=False), default=None,
              help="also write the graph list as JSON")
@large_opt
@format_opt
@output_opt
def hairy(operad, flavor, legs, max_x, graphs_out, allow_large, fmt, output):
    """Graph-enumeration term dimensions next to the Tor-side term dimensions."""
    check_cap(max_x, "max-x", allow_large)
    C = load_operad(operad)
    M = OdotModule(C, FLAVORS[flavor][2])
    rep = HomologyReport("hairy", C.name, flavor, "hairy", params={"legs": legs, "max_x": max_x})
    arities = [k for k in range(1, max_x + 1) if C.dim(k)]
    graphs = []
    ok = True
    for x in range(legs, max_x + 1, 2):
        gs = enumerate_graphs(x, None, legs, arities, cap=HARD_ARITY)
        graphs += gs
        g = graph_term_dimension(C, flavor, x, legs, cap=HARD_ARITY)
        k = tor_term(M, flavor, legs, x).dim
        ok &= g == k
        rep.rows.append(DegreeRow((x - legs) // 2, x, g, extra={"koszul_dim": k, "graph_classes": len(gs)}))
    rep.checks["oracle_match"] = ok
    if graphs_out:
        Path(graphs_out).write_text(graphs_to_json(graphs) + "\n")
    emit(rep, fmt, output)
    if not ok:
        raise Fail("graph and Koszul term dimensions differ", EXIT_INVARIANT)


@main.command("ce-compare")
@operad_opt
@click.option("--dim-v", default=2, show_default=True)
@click.option("--form", type=click.Choice(["symplectic", "symmetric"]), default="symplectic", show_default=True)
@format_opt
@output_opt
def ce_compare_cmd(operad, dim_v, form, fmt, output):
    """Evaluated Koszul complex of L.(C) against Chevalley-Eilenberg chains of C(V)."""
    C = load_operad(operad)
    if form != "symplectic":
        raise Fail("the CE comparison needs a symplectic form, got a symmetric one", EXIT_VALIDATION)
    if dim_v < 2 or dim_v % 2:
        raise Fail("dim V must be even and positive", EXIT_VALIDATION)
    if not isinstance(C, AlgebraOperad):
        raise Fail("the CE comparison is set up for operads (B, sigma)", EXIT_VALIDATION)
    lie_dim = len(ColoredBlocks(C, dim_v, 2))
    if lie_dim > CE_LIE_CAP:
        raise Fail(f"dim C(V) = {lie_dim} exceeds the cap {CE_LIE_CAP}", EXIT_CAP)
    try:
        r = ce_compare(C, dim_v)
    except ValueError as e:
        raise Fail(str(e), EXIT_INVARIANT) from None
    rep = HomologyReport("ce-compare", C.name, "even", "evaluated", params={"dim_v": dim_v, "lie_dim": r["lie_dim"]})
    for d in r["degrees"]:
        rep.rows.append(DegreeRow(d["degree"], 0, d["koszul_dim"], d["koszul_homology"],
                                  extra={"ce_chain_dim": d["ce_dim"], "ce_homology_dim": d["ce_homology"]}))
    rep.checks.update(match=r["match"], d_squared_zero=r["d_squared_zero"])
    emit(rep, fmt, output)
    if not r["match"]:
        raise Fail("CE and Koszul sides differ", EXIT_INVARIANT)


@main.command("koszul-check")
@click.option("--max-size", default=6, show_default=True, help="largest |U|")
@click.option("--side", type=click.Choice(["plus", "minus", "both"]), default="both", show_default=True)
@large_opt
@format_opt
@output_opt
def koszul_check(max_size, side, allow_large, fmt, output):
    """Unit complexes (U, X): acyclic for |U| != |X|, the regular representation for U = X."""
    check_cap(max_size, "max-size", allow_large)
    rep = HomologyReport("koszul-check", "n/a", "n/a", side, params={"max_size": max_size})
    ok = True
    for sd in (("plus", "minus") if side == "both" else (side,)):
        for X in range(max_size + 1):
            for U in range(X, max_size + 1, 2):
                cx = unit_complex(U, X, sd)
                for r in cx.degrees:
                    h = cx.homology_dim(r)
                    want = factorial(X) if U == X else 0
                    ok &= h == want
                    rep.rows.append(DegreeRow(r, X + 2 * r, cx.dims[r], h, extra={"U": U, "X": X, "side": sd}))
    rep.checks["koszul"] = ok
    emit(rep, fmt, output)
    if not ok:
        raise Fail("a unit complex has unexpected homology", EXIT_INVARIANT)


@main.command()
@click.option("--ell", default=2, show_default=True, type=click.IntRange(2, 3))
@click.option("--d-max", default=1, show_default=True, type=click.IntRange(0, 3))
@format_opt
@output_opt
def nontorsion(ell, d_max, fmt, output):
    """Push the S_(ell^(ell-1)) class of Ext^0 along i_{2n,d} for d <= D_MAX."""
    lam = Partition((ell,) * (ell - 1))
    N = lam.size
    check_cap(N + 2 * d_max, "2n + 2d", False)
    M = OdotModule(get_operad("k-id"), "L")
    rep = HomologyReport("nontorsion", "k-id", "even", "ext", params={"ell": ell, "d_max": d_max, "lambda": str(lam)})
    ok = True
    for d in range(d_max + 1):
        if d == 0:
            mult = ext_complex(M, "even", N).decompose(0).get(tuple(lam), 0)
            if not mult:
                raise Fail(f"no {lam} class in Ext^0 at 2n={N}", EXIT_INVARIANT)
            dim = mult * hook_dimension(lam)
            rep.rows.append(DegreeRow(0, N, dim, dim, {tuple(lam): mult}))
            continue
        dim, r = nontorsion_check(M, "even", lam, d)
        if dim == 0:
            raise Fail(f"no {lam} class in Ext^0 at 2n={N}", EXIT_INVARIANT)
        ok &= r > 0
        rep.rows.append(DegreeRow(d, N + 2 * d, dim, r, extra={"image_rank": r}))
    rep.checks["nonzero"] = ok
    emit(rep, fmt, output)
    if not ok:
        raise Fail("the class is annihilated", EXIT_INVARIANT)


@main.command()
@click.option("--t", "t", default=3, show_default=True, help="number of chords; 2n = 2t")
@click.option("--twist", default="(+;-)", show_default=True)
@click.option("--method", type=click.Choice(["characters", "schur", "both"]), default="both", show_default=True)
@format_opt
@output_opt
def plethysm(t, twist, method, fmt, output):
    """Specht content of Ind_{S2 wr St}^{S2t} of a twist character."""
    try:
        tw = Twist.parse(twist)
    except ValueError as e:
        raise Fail(str(e), EXIT_VALIDATION) from None
    if 2 * t > 12 or (method != "characters" and 2 * t > 8):
        raise Fail("2t is capped at 12 (characters) and 8 (Schur evaluation)", EXIT_CAP)
    rep = HomologyReport("plethysm", "n/a", "n/a", "plethysm", params={"t": t, "twist": str(tw), "method": method})
    dec = induced_decomposition(t, tw) if method != "schur" else plethysm_schur(t, tw)
    dim = factorial(2 * t) // (2 ** t * factorial(t))
    rep.rows.append(DegreeRow(t, 2 * t, dim, dim, dec))
    if method == "both":
        rep.checks["methods_agree"] = plethysm_schur(t, tw) == dec
    if tw == PM:
        rep.checks["equals_q1"] = sorted(dec) == sorted(q1_partitions(2 * t))
    if tw == MP:
        rep.checks["equals_even_columns"] = sorted(dec) == sorted(even_column_partitions(2 * t))
    emit(rep, fmt, output)
    if not all(rep.checks.values()):
        raise Fail("plethysm identity failed", EXIT_INVARIANT)


@main.command()
@click.option("--max", "size", default=6, show_default=True, help="size bound for every suite")
@click.option("--suite", "names", multiple=True, help="run only these suites")
@large_opt
def verify(size, names, allow_large):
    """Run the invariant suites and print a pass/fail matrix with timings."""
    from .suites import SUITES, run_suites
    check_cap(size, "max", allow_large)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise Fail(f"unknown suites {unknown}; choose from {sorted(SUITES)}", EXIT_VALIDATION)
    rows = run_suites(size, list(names) or None)
    first = None
    for name, ok, secs, checks in rows:
        click.echo(f"{name:<12} {'PASS' if ok else 'FAIL'} {len(checks):>4} checks {secs:8.2f}s")
        if not ok and first is None:
            first = next(c for c in checks if not c.ok)
    if first is not None:
        click.echo(json.dumps({"suite": first.suite, "instance": first.instance, "data": first.data},
                              default=str), err=True)
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()
