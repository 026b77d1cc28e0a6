import itertools
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from severi.fields import GF, QQ
from severi.linalg import ExactMatrix, det, mat_kernel, mat_rank, rref, solve_affine


def brute_rank_mod_p(rows, p):
    # |kernel| = p^(ncols - rank), counted by enumeration
    ncols = len(rows[0])
    count = 0
    for v in itertools.product(range(p), repeat=ncols):
        if all(sum(a * b for a, b in zip(r, v)) % p == 0 for r in rows):
            count += 1
    k = 0
    while p ** k < count:
        k += 1
    return ncols - k


def test_two_pivot_example():
    # hand-checked: second row is twice the first plus a pivot in column 3
    M = ExactMatrix.make(QQ, [[1, 2, 3], [2, 4, 7], [3, 6, 10]])
    ech, piv = rref(M)
    assert piv == [0, 2]
    assert mat_rank(M) == 2
    (v,) = mat_kernel(M)
    assert list(v) == [Fraction(-2), Fraction(1), Fraction(0)]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), min_size=1, max_size=4))
def test_rank_against_enumeration(rows):
    M = ExactMatrix.make(GF(3), rows)
    assert mat_rank(M) == brute_rank_mod_p(rows, 3)


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=5, max_size=5), min_size=1, max_size=6))
def test_rank_over_rationals_matches_numpy(rows):
    M = ExactMatrix.make(QQ, rows)
    assert mat_rank(M) == np.linalg.matrix_rank(np.array(rows, dtype=float))


@settings(max_examples=60)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=2, max_size=5))
def test_kernel_is_kernel(rows):
    M = ExactMatrix.make(QQ, rows)
    K = mat_kernel(M)
    assert len(K) == 4 - mat_rank(M)
    for v in K:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


def test_determinant():
    M = ExactMatrix.make(QQ, [[2, 0, 1], [1, 3, 2], [1, 1, 1]])
    assert det(M) == 2 * (3 - 2) - 0 + 1 * (1 - 3)
    assert det(ExactMatrix.make(GF(7), [[1, 2], [2, 4]])) == 0


def test_solve_affine():
    A = ExactMatrix.make(QQ, [[1, 1], [1, -1]])
    s = solve_affine(A, [3, 1])
    assert s.consistent and s.particular == (2, 1)
    s = solve_affine(ExactMatrix.make(QQ, [[1, 1], [2, 2]]), [1, 3])
    assert not s.consistent
