from math import factorial

import pytest
from hypothesis import given, strategies as st

from brkz.symrep import (MM, MP, PM, PP, Partition, WreathElement, character, class_size,
                         compose, cycle_type, even_column_partitions, even_row_partitions,
                         hook_dimension, induced_decomposition, inner_product, inverse, kostka,
                         partitions, q1_partitions, reduced_word, schur_from_weights, sign)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1)).map(tuple))


def test_partition_counts_and_order():
    assert [len(list(partitions(n))) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert str(Partition.parse("(3,3)")) == "(3,3)"


@pytest.mark.parametrize("n", range(1, 9))
def test_character_orthogonality_and_degrees(n):
    lams = list(partitions(n))
    chars = {lam: {mu: character(lam, mu) for mu in lams} for lam in lams}
    for lam in lams:
        assert character(lam, (1,) * n) == hook_dimension(lam)
        for mu in lams:
            assert inner_product(chars[lam], chars[mu], n) == (lam == mu)
    assert sum(hook_dimension(l) ** 2 for l in lams) == factorial(n)


@given(perms, perms)
def test_permutation_helpers(p, q):
    if len(p) != len(q):
        return
    assert sign(compose(p, q)) == sign(p) * sign(q)
    assert compose(p, inverse(p)) == tuple(range(1, len(p) + 1))
    # reduced words rebuild the permutation, applying the last letter first
    r = tuple(range(1, len(p) + 1))
    for j in reversed(reduced_word(p)):
        s = tuple(j + 1 if x == j else j if x == j + 1 else x for x in range(1, len(p) + 1))
        r = compose(s, r)
    assert r == p
    assert len(reduced_word(p)) % 2 == (sign(p) < 0)


def test_class_sizes_sum_to_group_order():
    for n in range(1, 8):
        assert sum(class_size(mu) for mu in partitions(n)) == factorial(n)


def test_kostka_inversion_recovers_schur_content():
    n = 5
    dec = {(3, 2): 2, (2, 2, 1): 1}
    weights = {mu: sum(m * kostka(lam, mu) for lam, m in dec.items()) for mu in partitions(n)}
    assert schur_from_weights(weights, n) == dec


def test_wreath_embedding_is_a_homomorphism():
    t = 3
    a = WreathElement((1, 0, 1), (2, 3, 1))
    b = WreathElement((0, 1, 1), (3, 1, 2))
    assert (a @ b).to_permutation() == compose(a.to_permutation(), b.to_permutation())
    for tw in (PP, PM, MP, MM):
        assert (a @ b).twist_character(tw) == a.twist_character(tw) * b.twist_character(tw)


def test_small_induced_decompositions():
    assert induced_decomposition(2, PM) == {(3, 1): 1}
    assert induced_decomposition(2, MP) == {(2, 2): 1, (1, 1, 1, 1): 1}
    assert induced_decomposition(2, PP) == {(4,): 1, (2, 2): 1}
    assert induced_decomposition(3, PM) == {(4, 1, 1): 1, (3, 3): 1}
    assert q1_partitions(6) == [(4, 1, 1), (3, 3)]


@pytest.mark.parametrize("t", range(1, 5))
def test_twist_identities(t):
    assert sorted(induced_decomposition(t, PP)) == sorted(even_row_partitions(2 * t))
    assert sorted(induced_decomposition(t, MP)) == sorted(even_column_partitions(2 * t))
    assert sorted(induced_decomposition(t, PM)) == sorted(q1_partitions(2 * t))
    tot = sum(m * hook_dimension(l) for l, m in induced_decomposition(t, MM).items())
    assert tot == factorial(2 * t) // (2 ** t * factorial(t))


def test_cycle_type():
    assert cycle_type((2, 3, 1, 5, 4)) == (3, 2)
