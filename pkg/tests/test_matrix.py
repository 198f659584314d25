from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

import oracles
from starmat.errors import DimensionError
from starmat.matrix import (Matrix, add, diag_split, equal, hadamard, matmul, nonassoc_witness,
                            scale, star, star2_closed, subtract)
from starmat.scalars import FLOAT, RATIONAL

ENTRY = st.sampled_from([F(-2), F(-1), F(0), F(1, 2), F(1), F(2)])


def square(n):
    return st.lists(st.lists(ENTRY, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


any_n = st.integers(1, 4)
same_n_triple = any_n.flatmap(lambda n: st.tuples(square(n), square(n), square(n)))

A = Matrix([[1, 2], [3, 4]])
B = Matrix([[5, 6], [7, 8]])


def test_construction_invariants():
    with pytest.raises(DimensionError):
        Matrix([])
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionError):
        Matrix.from_flat(2, [1, 2, 3])
    assert A.backend is RATIONAL and all(isinstance(x, F) for x in A.entries)
    assert Matrix([[1.5]]).backend is FLOAT


def test_ordinary_product():
    assert matmul(A, B) == Matrix(oracles.matmul(oracles.mat(A.rows), oracles.mat(B.rows)))
    assert matmul(A, B) == Matrix([[19, 22], [43, 50]])


def test_identity_ordinary():
    assert matmul(Matrix.identity(2), A) == A


def test_arith_family():
    assert add(A, B) == Matrix([[6, 8], [10, 12]])
    assert subtract(B, A) == Matrix([[4, 4], [4, 4]])
    assert scale(F(1, 2), A) == Matrix([[F(1, 2), 1], [F(3, 2), 2]])
    assert equal(A, A) and not equal(A, B)


@pytest.mark.parametrize("op", [add, subtract, matmul, star, hadamard, equal])
def test_dimension_mismatch(op):
    with pytest.raises(DimensionError):
        op(A, Matrix.identity(3))


def test_diag_split_examples():
    d, o = diag_split(A)
    assert d == Matrix([[1, 0], [0, 4]]) and o == Matrix([[0, 2], [3, 0]])
    dm = Matrix.diagonal([3, 5])
    assert diag_split(dm) == (dm, Matrix.zero(2))
    assert diag_split(Matrix.zero(3)) == (Matrix.zero(3), Matrix.zero(3))


@given(any_n.flatmap(square))
def test_diag_split_reconstructs(a):
    d, o = diag_split(a)
    assert d + o == a
    assert d.is_diagonal() and all(x == 0 for x in o.diag_entries())


def test_star_example_against_entrywise_oracle():
    expected = oracles.entrywise_star(oracles.mat(A.rows), oracles.mat(B.rows))
    assert expected == oracles.mat([[5, 22], [43, 32]])
    assert star(A, B) == Matrix(expected)


def test_star_3x3_all_ones():
    ones = Matrix([[1] * 3] * 3)
    expected = oracles.star_brute(oracles.mat(ones.rows), oracles.mat(ones.rows))
    assert expected == oracles.mat([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
    assert star(ones, ones) == Matrix(expected)


@given(any_n.flatmap(square))
def test_unit(a):
    one = Matrix.identity(a.n)
    assert star(one, a) == a == star(a, one)


def test_star2_closed_examples():
    assert star2_closed(A, B) == Matrix([[5, 22], [43, 32]])
    a1, b1 = Matrix([[0, 3], [-1, 0]]), Matrix([[0, F(1, 2)], [2, 0]])
    assert star2_closed(a1, b1).is_zero()
    assert star(a1, b1).is_zero()
    one = Matrix.identity(2)
    assert star2_closed(one, one) == one
    with pytest.raises(DimensionError):
        star2_closed(Matrix.identity(3), Matrix.identity(3))


@given(square(2), square(2))
def test_star2_closed_equals_star(a, b):
    assert star2_closed(a, b) == star(a, b)
    assert star(a, b) == Matrix(oracles.entrywise_star(oracles.mat(a.rows), oracles.mat(b.rows)))


def test_hadamard_examples():
    assert hadamard(A, B) == Matrix([[5, 12], [21, 32]])
    assert hadamard(A, Matrix.identity(2)) == diag_split(A).diag
    assert hadamard(A, Matrix.zero(2)).is_zero()


@given(same_n_triple, ENTRY)
def test_bilinearity(abc, s):
    a, b, c = abc
    assert star(a, b + c) == star(a, b) + star(a, c)
    assert star(b + c, a) == star(b, a) + star(c, a)
    assert star(a.scale(s), b) == star(a, b.scale(s)) == star(a, b).scale(s)


@given(square(1), square(1))
def test_n1_is_scalar_multiplication(a, b):
    assert star(a, b).entries == (a.entries[0] * b.entries[0],)


@given(square(2), square(2), square(2))
def test_associative_n2(a, b, c):
    assert star(star(a, b), c) == star(a, star(b, c))


@given(any_n.flatmap(lambda n: st.tuples(square(n), square(n))))
def test_diagonal_law_and_product_decomposition(ab):
    a, b = ab
    a0, a1 = diag_split(a)
    b0, b1 = diag_split(b)
    assert diag_split(star(a, b)).diag == hadamard(a0, b0)
    assert diag_split(matmul(a, b)).offdiag == (
        matmul(a1, b0) + matmul(a0, b1) + diag_split(matmul(a1, b1)).offdiag)


def test_nonassoc_witness_n3():
    w = nonassoc_witness(3)
    assert w.lhs == Matrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert w.rhs == Matrix.zero(3)
    # recompute both bracketings with the brute-force oracle
    a, b, c = (oracles.mat(m.rows) for m in (w.a, w.b, w.c))
    assert Matrix(oracles.star_brute(oracles.star_brute(a, b), c)) == w.lhs
    assert Matrix(oracles.star_brute(a, oracles.star_brute(b, c))) == w.rhs


@pytest.mark.parametrize("n", [4, 5, 6])
def test_nonassoc_witness_padded(n):
    w = nonassoc_witness(n)
    assert w.lhs != w.rhs
    assert w.lhs == Matrix.unit(n, 0, 1) and w.rhs.is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_nonassoc_witness_small_n(n):
    with pytest.raises(DimensionError):
        nonassoc_witness(n)


def test_float_backend_equality_and_mixing():
    a = Matrix([[1.0, 0.1], [0.2, 3.0]])
    b = Matrix([[1, F(1, 10)], [F(1, 5), 3]])
    assert a == b
    assert star(a, b).backend is FLOAT
    assert a.star(b) == b.star(b)
