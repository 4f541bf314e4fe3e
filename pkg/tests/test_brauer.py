import itertools
import random

import pytest

from brkz.brauer import (MM, MP, PM, PP, BrauerMorphism, TwistedElement, act, canonical_inclusion,
                         compose_basis, degree_one, factorize, hom_basis, normalize)
from brkz.symrep import compose, identity

TWISTS = (PP, PM, MP, MM)


def test_hom_counts():
    # |ub(m, n)| = n!/(m! ... ) = n!/((n-m)/2)! / 2^((n-m)/2) * ... : check small values directly
    assert len(hom_basis(0, 2)) == 1
    assert len(hom_basis(0, 4)) == 3
    assert len(hom_basis(2, 4)) == 12
    assert len(hom_basis(1, 2)) == 0


def test_ascii_round_trip():
    f = BrauerMorphism(2, 6, (2, 5), [(1, 3), (4, 6)])
    assert f.to_ascii() == "2->6 | 2 5 | (1-3) (4-6)"
    assert BrauerMorphism.from_ascii(f.to_ascii()) == f
    with pytest.raises(ValueError):
        BrauerMorphism(0, 2, (), [(2, 1)])


def test_normalize_signs():
    assert normalize(0, 2, (), [(2, 1)], MP)[0] == -1
    assert normalize(0, 2, (), [(2, 1)], PM)[0] == 1
    assert normalize(0, 4, (), [(3, 4), (1, 2)], PM)[0] == -1
    assert normalize(0, 4, (), [(3, 4), (1, 2)], MP)[0] == 1


@pytest.mark.parametrize("tw", TWISTS)
def test_associativity_up_to_size_8(tw):
    rng = random.Random(7)
    triples = [(0, 2, 4, 6), (1, 3, 5, 7), (2, 4, 6, 8), (0, 2, 4, 8), (2, 2, 4, 6), (0, 4, 6, 8)]
    for a, b, c, d in triples:
        F, G, H = hom_basis(a, b), hom_basis(b, c), hom_basis(c, d)
        for _ in range(40):
            f, g, h = rng.choice(F), rng.choice(G), rng.choice(H)
            x = TwistedElement.basis(f, tw)
            y = TwistedElement.basis(g, tw)
            z = TwistedElement.basis(h, tw)
            assert (z @ y) @ x == z @ (y @ x)


@pytest.mark.parametrize("tw", TWISTS)
def test_symmetric_group_actions(tw):
    rng = random.Random(3)
    for m, n in ((0, 4), (2, 4), (1, 5), (2, 6)):
        B = hom_basis(m, n)
        for f in rng.sample(B, min(6, len(B))):
            x = TwistedElement.basis(f, tw)
            p = tuple(rng.sample(range(1, n + 1), n))
            q = tuple(rng.sample(range(1, n + 1), n))
            assert act(compose(p, q), x) == act(p, act(q, x))
            assert act(identity(n), x) == x
            if m:
                r = tuple(rng.sample(range(1, m + 1), m))
                s = tuple(rng.sample(range(1, m + 1), m))
                assert act(compose(r, s), x, "right") == act(s, act(r, x, "right"), "right")


@pytest.mark.parametrize("tw", TWISTS)
def test_factorization_through_degree_one_maps(tw):
    for f in hom_basis(1, 5)[:20] + hom_basis(0, 6)[:15]:
        c, sigma, steps = factorize(f, tw)
        assert c in (1, -1)
        assert len(steps) == len(f.chords)


def test_canonical_inclusion_and_degree_one():
    i = canonical_inclusion(2, 2)
    assert i.to_ascii() == "2->6 | 1 2 | (3-4) (5-6)"
    d = degree_one(4, 3, 1)
    assert d.chords == ((1, 3),)
    s, h = compose_basis(d, canonical_inclusion(0, 1), PP)
    assert h.chords == ((1, 3), (2, 4)) and s == 1
