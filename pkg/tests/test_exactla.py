from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from brkz.exactla import (EchelonSpace, RationalMatrix, homology, kernel_basis, rank,
                          rank_mod_p, solve)

small = st.integers(-3, 3)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return [[draw(small) for _ in range(c)] for _ in range(r)]


@given(matrices())
def test_rank_agrees_with_fraction_elimination(rows):
    A = RationalMatrix.from_dense(rows)
    # reference: plain Gaussian elimination over Fraction
    M = [[Fraction(x) for x in r] for r in rows]
    ref, col = 0, 0
    while ref < len(M) and col < len(M[0]):
        piv = next((i for i in range(ref, len(M)) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[ref], M[piv] = M[piv], M[ref]
        for i in range(len(M)):
            if i != ref and M[i][col]:
                f = M[i][col] / M[ref][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[ref])]
        ref += 1
        col += 1
    assert rank(A) == ref == rank(A, prepass=True) == rank(A.T)


@given(matrices())
def test_kernel_vectors_are_killed(rows):
    A = RationalMatrix.from_dense(rows)
    basis, _ = kernel_basis(A)
    assert len(basis) == A.ncols - rank(A)
    for v in basis:
        assert not A.apply(v)


@given(matrices(5))
def test_mod_p_rank_is_a_lower_bound_and_usually_equal(rows):
    A = RationalMatrix.from_dense(rows)
    assert rank_mod_p(A) == np.linalg.matrix_rank(np.array(rows, dtype=float)) == rank(A)


def test_solve_and_echelon():
    A = RationalMatrix.from_dense([[1, 2], [3, 4], [5, 6]])
    x = solve(A, {0: 5, 1: 11, 2: 17})
    assert x == {0: 1, 1: 2}
    assert solve(A, {0: 1}) is None
    E = EchelonSpace(3)
    assert E.insert({0: 1, 1: 1}, {0: 1})
    assert not E.insert({0: 2, 1: 2}, {1: 1})
    assert E.contains({0: Fraction(1, 2), 1: Fraction(1, 2)})


def test_homology_of_a_short_complex():
    # Z -> Z^2 -> Z with d(e) = (1, 1), d(a, b) = a - b: exact in the middle
    d1 = RationalMatrix.from_dense([[1], [1]])
    d2 = RationalMatrix.from_dense([[1, -1]])
    assert homology(d1, d2).dim == 0
    assert homology(None, d2).dim == 1
    assert homology(d1, None).dim == 1
