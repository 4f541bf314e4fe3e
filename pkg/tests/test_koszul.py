from math import factorial

import jsonschema
import pytest

from brkz.cyclic import OdotModule, get_operad
from brkz.koszul import (FlavorMismatch, ext_complex, ext_report, tor_complex, tor_report,
                         unit_complex, unit_term_dimension, validate_report)


@pytest.fixture(scope="module")
def L():
    return OdotModule(get_operad("k-id"), "L")


def test_flavor_must_match_module_twist(L):
    with pytest.raises(FlavorMismatch):
        ext_complex(L, "odd", 2)
    with pytest.raises(FlavorMismatch):
        tor_complex(OdotModule(get_operad("k-id"), "S"), "even", 2, 6)


def test_ext_zero_examples(L):
    assert ext_complex(L, "even", 2).decompose(0) == {(2,): 1}
    assert ext_complex(L, "even", 4).homology_dim(0) == 0
    assert ext_complex(L, "even", 6).decompose(0) == {(3, 3): 1}


def test_ext_odd_degree_two_at_six():
    S = OdotModule(get_operad("k-id"), "S")
    assert ext_complex(S, "odd", 6).decompose(2) == {(4, 1, 1): 1, (3, 3): 1}


@pytest.mark.parametrize("N", [2, 4, 6])
def test_decomposition_methods_agree(L, N):
    cx = ext_complex(L, "even", N)
    by_young = cx.decompose_all()
    for k in cx.degrees:
        assert cx.decompose(k) == by_young.get(k, {})


@pytest.mark.parametrize("name", ["k-id", "qz2"])
@pytest.mark.parametrize("flavor,power", [("even", "L"), ("odd", "S")])
def test_sign_formula_against_diagram_composition(name, flavor, power):
    M = OdotModule(get_operad(name), power)
    for N in (4, 6):
        a, b = ext_complex(M, flavor, N), ext_complex(M, flavor, N, oracle=True)
        assert a.diffs.keys() == b.diffs.keys()
        assert all(a.diffs[k] == b.diffs[k] for k in a.diffs)
        assert a.check_d_squared() == [] and a.check_equivariance() == []
    a, b = tor_complex(M, flavor, 2, 8), tor_complex(M, flavor, 2, 8, oracle=True)
    assert all(a.diffs[k] == b.diffs[k] for k in a.diffs)
    assert a.check_equivariance() == []


def test_tor_vanishes_below_the_truncation():
    M = OdotModule(get_operad("qz2"), "S")
    cx = tor_complex(M, "odd", 2, 8)
    assert [cx.homology_dim(t) for t in cx.degrees if 2 + 2 * t <= 6] == [0, 0, 0]
    assert cx.homology_dim(3) != 0  # the truncated top degree is not meaningful


@pytest.mark.parametrize("side", ["plus", "minus"])
def test_unit_complexes(side):
    for X in range(0, 5):
        for U in range(X, 7, 2):
            cx = unit_complex(U, X, side)
            assert cx.check_d_squared() == []
            for r in cx.degrees:
                assert cx.dims[r] == unit_term_dimension(U, X, X + 2 * r)
            H = {r: cx.homology_dim(r) for r in cx.degrees}
            assert H == ({0: factorial(X)} if U == X else {r: 0 for r in cx.degrees})


def test_unit_term_dimension_example():
    assert unit_term_dimension(4, 2, 4) == 12


def test_reports_validate(L):
    rep = ext_report(L, "even", 4, "k-id")
    doc = rep.to_json()
    assert validate_report(doc)
    assert rep.to_tsv().splitlines()[0].startswith("degree\tarity")
    doc["rows"][0]["decomposition"] = {"(2)": 5}
    with pytest.raises((ValueError, jsonschema.ValidationError)):
        validate_report(doc)
    t = tor_report(L, "even", 2, 6, "k-id")
    assert t.checks["acyclic"] and [r.arity for r in t.rows] == [2, 4, 6]


def test_chain_character_matches_homology_character_without_differential():
    for side in ("plus", "minus"):
        cx = unit_complex(4, 4, side)
        assert cx.chain_character(0) == cx.homology_character(0)
