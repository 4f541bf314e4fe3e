import pytest

from brkz.cyclic import OdotModule, get_operad
from brkz.fbmod import day_convolve, specht_module
from brkz.koszul import FlavorMismatch
from brkz.schureval import (BracketAlgebra, ce_compare, contraction_differential, double_factorial,
                            plethysm_schur, schur_dim_character, schur_dim_direct, schur_dimension,
                            symmetric_form, symplectic_form, symplectic_invariants)
from brkz.symrep import MM, MP, PM, PP, induced_decomposition


def test_hook_content():
    assert schur_dimension((2,), 2) == 3
    assert schur_dimension((1, 1), 2) == 1
    assert schur_dimension((1, 1, 1), 2) == 0
    assert schur_dimension((2, 1), 3) == 8


@pytest.mark.parametrize("dim_v", [1, 2, 3])
def test_schur_evaluation_two_ways(dim_v):
    F = day_convolve(specht_module((2, 1)), specht_module((1, 1)), 5)
    for lam in ((3,), (2, 1), (1, 1, 1), (2, 2)):
        S = specht_module(lam)
        n = sum(lam)
        assert schur_dim_direct(S, n, dim_v) == schur_dim_character(S, n, dim_v) == schur_dimension(lam, dim_v)
    assert schur_dim_direct(F, 5, dim_v) == schur_dim_character(F, 5, dim_v)


@pytest.mark.parametrize("name,dim_v", [("k-id", 2), ("dual", 2), ("qz2", 2), ("k-id", 4)])
def test_ce_comparison(name, dim_v):
    r = ce_compare(get_operad(name), dim_v)
    assert r["match"] and r["d_squared_zero"]


def test_sl2_homology():
    r = ce_compare(get_operad("k-id"), 2)
    assert r["lie_dim"] == 3
    assert [d["ce_homology"] for d in r["degrees"]] == [1, 0, 0, 1]


def test_bracket_is_lie_for_every_builtin_algebra():
    for name in ("k-id", "qz2", "dual", "mat2-t"):
        assert BracketAlgebra(get_operad(name), 2, symplectic_form(2), 2).check_jacobi() == []


def test_form_kind_is_checked():
    with pytest.raises(FlavorMismatch):
        contraction_differential(OdotModule(get_operad("k-id"), "L"), 2, symmetric_form(2))
    with pytest.raises(FlavorMismatch):
        symplectic_invariants(3, 2)


def test_untwisted_day_power_has_no_evaluation():
    # S.(C) lives over db(+;+); only (-;-) and (+;-) modules evaluate
    with pytest.raises(FlavorMismatch):
        contraction_differential(OdotModule(get_operad("k-id"), "S"), 2, symmetric_form(2))


def test_evaluated_degree_dims():
    cx = contraction_differential(OdotModule(get_operad("k-id"), "L"), 2, max_arity=6)
    assert cx.dims == {0: 1, 1: 3, 2: 3, 3: 1}


def test_symplectic_invariants_small():
    assert [symplectic_invariants(2, n) for n in range(7)] == [1, 0, 1, 0, 2, 0, 5]
    assert symplectic_invariants(4, 4) == double_factorial(3)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_plethysm_two_routes(t):
    for tw in (PP, PM, MP, MM):
        assert plethysm_schur(t, tw) == induced_decomposition(t, tw)


def test_schur_evaluate_examples():
    from brkz.fbmod import sign_module, trivial_module
    from brkz.schureval import schur_evaluate
    assert schur_evaluate(trivial_module(2), 2, 4) == {2: 3}
    assert schur_evaluate(sign_module(2), 2, 4) == {2: 1}
    # Lambda^2(S^2 V) at dim V = 2
    assert schur_evaluate(OdotModule(get_operad("k-id"), "L"), 2, 4)[4] == 3
    cx = contraction_differential(OdotModule(get_operad("k-id"), "L"), 0)
    assert cx.dims == {0: 1}
