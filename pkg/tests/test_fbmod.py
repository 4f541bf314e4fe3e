import pytest

from brkz.exactla import RationalMatrix
from brkz.fbmod import (Coinvariants, FBModule, day_convolve, direct_sum, odot_power,
                        sign_module, specht_module, standard_tableaux, trivial_module)
from brkz.symrep import hook_dimension, partitions


@pytest.mark.parametrize("n", range(1, 7))
def test_specht_modules_are_irreducible(n):
    for lam in partitions(n):
        S = specht_module(lam)
        assert S.dim(n) == hook_dimension(lam) == len(standard_tableaux(lam))
        assert S.decompose(n) == {tuple(lam): 1}


def test_day_convolution_littlewood_richardson():
    F = day_convolve(specht_module((2, 1)), specht_module((2,)), 5)
    assert F.decompose(5) == {(4, 1): 1, (3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1}


def test_odot_powers_of_trivial_arity_two():
    T = trivial_module(2)
    assert odot_power(T, 2, "S", 4).decompose(4) == {(4,): 1, (2, 2): 1}
    assert odot_power(T, 2, "L", 4).decompose(4) == {(3, 1): 1}


def test_json_round_trip_and_validation():
    F = direct_sum(specht_module((2, 1)), sign_module(3))
    G = FBModule.from_json(F.to_json())
    assert G.decompose(3) == F.decompose(3)
    bad = RationalMatrix.from_dense([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        FBModule({3: (2, [bad, bad])})


def test_coinvariants_twisted_orbits():
    # S_2 swapping two basis vectors; trivial vs sign character
    swap = lambda p, i: {1 - i if p == (2, 1) else i: 1}
    assert Coinvariants(2, swap, [((2, 1), 1)]).dim == 1
    assert Coinvariants(2, swap, [((2, 1), -1)]).dim == 1
    fix = lambda p, i: {i: 1}
    assert Coinvariants(1, fix, [((2, 1), -1)]).dim == 0
