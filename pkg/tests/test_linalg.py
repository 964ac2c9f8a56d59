"""Exact linear algebra over the rationals."""

from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from moulde.linalg import nullspace, rank, rref, solve


def _m(rows):
    return [[F(x) for x in row] for row in rows]


entries = st.integers(-4, 4).map(F)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(entries, min_size=c, max_size=c),
                           min_size=1, max_size=max_rows))


def test_rref_identity():
    m = _m([[2, 0], [0, 3]])
    red, pivots = rref(m)
    assert red == _m([[1, 0], [0, 1]])
    assert pivots == [0, 1]


def test_rref_dependent_rows():
    m = _m([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    red, pivots = rref(m)
    assert pivots == [0, 1]
    assert red[0] == _m([[1, 0, 1]])[0]
    assert red[1] == _m([[0, 1, 1]])[0]


def test_rank_known():
    assert rank(_m([[1, 2], [2, 4]])) == 1
    assert rank(_m([[1, 0], [0, 1]])) == 2
    assert rank(_m([[0, 0], [0, 0]])) == 0


def test_nullspace_known():
    # x + y + z = 0 has a 2-dimensional nullspace
    basis = nullspace(_m([[1, 1, 1]]))
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_nullspace_empty_matrix():
    basis = nullspace([], cols=3)
    assert len(basis) == 3
    assert basis[0] == [F(1), F(0), F(0)]


def test_nullspace_full_rank():
    assert nullspace(_m([[1, 0], [0, 1]])) == []


def test_solve_unique():
    x = solve(_m([[2, 1], [1, -1]]), [F(5), F(1)])
    assert x == [F(2), F(1)]


def test_solve_inconsistent():
    assert solve(_m([[1, 1], [1, 1]]), [F(1), F(2)]) is None


def test_solve_underdetermined_gives_some_solution():
    m = _m([[1, 1, 0]])
    x = solve(m, [F(3)])
    assert x is not None
    assert sum(a * b for a, b in zip(m[0], x)) == 3


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    cols = len(m[0])
    assert rank(m) + len(nullspace(m)) == cols


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_nullspace_vectors_annihilated(m):
    for v in nullspace(m):
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_solve_verifies(m):
    # rhs built from a known solution is always solvable
    cols = len(m[0])
    x0 = [F(i - 1) for i in range(cols)]
    rhs = [sum(a * b for a, b in zip(row, x0)) for row in m]
    x = solve(m, rhs)
    assert x is not None
    for row, b in zip(m, rhs):
        assert sum(a * v for a, v in zip(row, x)) == b
