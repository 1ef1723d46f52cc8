from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gpolyhedra.rational_linalg import (
    complement_basis,
    format_rat,
    identity,
    matvec,
    nonneg_solve,
    nullspace_basis,
    rank,
    rref,
    simplex_minimize,
    solve_linear,
    to_rat,
    unit,
    vec,
    zeros,
)

F = Fraction

rats = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(rats, min_size=c, max_size=c), min_size=1, max_size=max_rows)
    )


def test_rref_identity():
    assert rref(identity(2)) == (identity(2), [0, 1])


def test_rref_rank_one():
    red, piv = rref([[1, 2], [2, 4]])
    assert red == ((1, 2), (0, 0))
    assert piv == [0]


def test_rref_zero():
    red, piv = rref([[0] * 3] * 3)
    assert red == ((0, 0, 0),) * 3 and piv == []


def test_nullspace_examples():
    assert nullspace_basis(identity(3)) == []
    (b,) = nullspace_basis([[1, 1]])
    assert b[0] == -b[1] != 0
    basis = nullspace_basis([[0, 0, 0]])
    assert len(basis) == 3 and rank(basis) == 3


def test_solve_linear_examples():
    b = vec([3, F(1, 2)])
    assert solve_linear(identity(2), b) == b
    x = solve_linear([[1, 1]], [2])
    assert x[0] + x[1] == 2
    assert solve_linear([[1], [1]], [0, 1]) is None


def test_complement_basis_examples():
    assert complement_basis([], 2) == [unit(2, 0), unit(2, 1)]
    assert complement_basis([vec([1, 0])], 2) == [unit(2, 1)]
    assert complement_basis(list(identity(3)), 3) == []


def test_complement_basis_rejects_dependent():
    with pytest.raises(ValueError):
        complement_basis([vec([1, 2]), vec([2, 4])], 2)


def test_rational_strings():
    assert to_rat("−3/6") == F(-1, 2)
    assert format_rat(F(-1, 2)) == "-1/2"
    assert format_rat(F(4)) == "4"
    with pytest.raises(TypeError):
        to_rat(0.5)


@given(rats, rats)
def test_exact_arithmetic(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    basis = nullspace_basis(m)
    assert rank(m) + len(basis) == len(m[0])
    for v in basis:
        assert matvec(m, v) == zeros(len(m))


@settings(max_examples=100, deadline=None)
@given(matrices(3, 4))
def test_complement_has_full_rank(m):
    n = len(m[0])
    _, piv = rref(m)
    red, _ = rref(m)
    sub = [red[i] for i in range(len(piv))]
    comp = complement_basis(sub, n)
    assert len(comp) == n - len(sub)
    assert rank(sub + comp) == n


@settings(max_examples=100, deadline=None)
@given(matrices(3, 4), st.data())
def test_solve_linear_solution_checks(m, data):
    x0 = data.draw(st.lists(rats, min_size=len(m[0]), max_size=len(m[0])))
    b = matvec(m, x0)
    x = solve_linear(m, b)
    assert x is not None and matvec(m, x) == b


def test_simplex_small_lp():
    # min -x1 - x2 st x1 + 2x2 + s1 = 4, 3x1 + x2 + s2 = 6
    status, value, z = simplex_minimize([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert status == "optimal" and value == F(-14, 5)
    assert z[:2] == (F(8, 5), F(6, 5))


def test_simplex_unbounded_and_infeasible():
    assert simplex_minimize([-1, 0], [[1, -1]], [0])[0] == "unbounded"
    assert simplex_minimize([0, 0], [[1, 1]], [-1])[0] == "infeasible"
    assert nonneg_solve([[1, 1]], [-1], 2) is None
    z = nonneg_solve([[1, 1], [1, 1]], [2, 2], 2)
    assert z is not None and z[0] + z[1] == 2
