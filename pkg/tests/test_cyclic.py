import pytest

from brkz.cyclic import (BUILTIN_OPERADS, AlgebraOperad, ComGe3, OdotModule, OperadError,
                         check_axioms, check_module, get_operad, module_action, operad_from_json)
from brkz.exactla import RationalMatrix


@pytest.mark.parametrize("name", sorted(BUILTIN_OPERADS))
def test_builtin_axioms(name):
    assert check_axioms(get_operad(name), 6) == []


def test_algebra_validation_names_the_triple():
    with pytest.raises(OperadError, match="triple"):
        AlgebraOperad([[[0, 1], [0, 0]], [[0, 0], [1, 0]]], [[1, 0], [0, 1]])
    with pytest.raises(OperadError, match="involution"):
        AlgebraOperad([[[1]]], [[2]])


def test_json_round_trip():
    for name in ("qz2", "mat2-t", "com-ge3"):
        C = get_operad(name)
        D = operad_from_json(C.to_json())
        assert [D.dim(n) for n in range(6)] == [C.dim(n) for n in range(6)]


def test_day_power_dimensions():
    L = OdotModule(get_operad("k-id"), "L")
    assert [L.dim(N) for N in range(9)] == [1, 0, 1, 0, 3, 0, 15, 0, 105]
    assert OdotModule(get_operad("qz2"), "S").dim(8) == 1680
    # Com>=3 in arity 6: one block of 6 or two blocks of 3
    assert OdotModule(ComGe3(), "S").dim(6) == 1 + 10


@pytest.mark.parametrize("name", ["k-id", "qz2", "dual", "mat2-t", "com-ge3"])
@pytest.mark.parametrize("flavor", ["L", "S"])
def test_module_relations(name, flavor):
    M = OdotModule(get_operad(name), flavor)
    for N in (4,) if name == "mat2-t" else (4, 6):
        assert check_module(M, N) == []


@pytest.mark.parametrize("name", ["k-id", "qz2", "dual", "mat2-t"])
@pytest.mark.parametrize("flavor", ["L", "S"])
def test_wreath_route_matches_contraction(name, flavor):
    C = get_operad(name)
    M = OdotModule(C, flavor)
    N = 6
    for u, v in ((1, 2), (2, 5), (3, 6)):
        direct = RationalMatrix.from_columns(M.dim(N - 2), [M.contract(N, u, v, {i: 1}) for i in range(M.dim(N))])
        assert module_action(C, flavor, u, v, N) == direct


def test_unit_detection():
    assert get_operad("qz2").is_unital
    assert not get_operad("com-ge3").is_unital
