from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from hopfsym.exactlin import (
    QQ,
    DimensionError,
    Field,
    FieldError,
    Scalar,
    contract,
    det,
    inverse,
    kernel,
    matmul,
    normalize_first,
    rank,
    rank_kernel,
    solve_linear,
)

import oracles

F5 = Field(5)


def test_rational_sum_is_exact():
    assert Scalar.parse("1/2") + Scalar.parse("1/3") == Scalar.parse("5/6")


def test_integral_rationals_are_ints():
    assert QQ("4/2") == 2 and type(QQ("4/2")) is int


def test_inverse_mod_5():
    assert F5.inv(3) == 2
    assert Scalar.of(F5, 3).inv() == Scalar.of(F5, 2)


def test_fraction_into_fp():
    assert F5(Fraction(1, 2)) == 3
    with pytest.raises(FieldError):
        F5(Fraction(1, 5))


def test_field_mismatch_raises():
    with pytest.raises(FieldError):
        Scalar.of(QQ, 1) + Scalar.of(F5, 1)
    with pytest.raises(FieldError):
        F5(Scalar.of(QQ, 1))


def test_division_by_zero():
    with pytest.raises(FieldError):
        QQ.inv(0)
    with pytest.raises(FieldError):
        QQ("1/0")


def test_field_parse():
    assert Field.parse("q") == QQ
    assert Field.parse("fp:7") == Field(7)
    for bad in ("fp:8", "fp:x", "reals"):
        with pytest.raises(FieldError):
            Field.parse(bad)


def test_rank_kernel_examples():
    r, ker = rank_kernel(QQ, QQ.array([[1, 2], [2, 4]]))
    assert r == 1 and [list(v) for v in ker] == [[-2, 1]]
    assert rank(QQ, QQ.eye(3)) == 3 and kernel(QQ, QQ.eye(3)) == []
    # same matrix is rank 1 mod 2 and rank 2 over Q
    M = [[1, 1], [1, 3]]
    assert rank(QQ, QQ.array(M)) == 2
    assert rank(Field(2), Field(2).array(M)) == 1


def test_contract_shape_mismatch():
    with pytest.raises(DimensionError):
        contract(QQ, QQ.zeros((2, 2, 2)), 0, QQ.array([1, 2, 3]))
    with pytest.raises(DimensionError):
        matmul(QQ, QQ.zeros((2, 3)), QQ.zeros((2, 2)))


def test_solve_linear():
    M = QQ.array([[1, 1], [1, -1]])
    x = solve_linear(QQ, M, QQ.array([3, 1]))
    assert list(x) == [2, 1]
    assert solve_linear(QQ, QQ.array([[1, 1], [1, 1]]), QQ.array([0, 1])) is None


def test_normalize_first():
    v = normalize_first(QQ, QQ.array([0, 3, 6]))
    assert list(v) == [0, 1, 2]


small = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 5).flatmap(lambda c: matrices(r, c))))
def test_rank_plus_nullity(M):
    r, ker = rank_kernel(QQ, QQ.array(M))
    assert r + len(ker) == len(M[0])
    assert r == sympy.Matrix(M).rank()
    for v in ker:
        assert not np.any(matmul(QQ, QQ.array(M), v) != 0)


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_det_matches_sympy(M):
    assert det(QQ, QQ.array(M)) == oracles.det(M)


@given(st.integers(1, 4).flatmap(lambda n: matrices(n, n)))
def test_inverse_matches_sympy(M):
    inv = inverse(QQ, QQ.array(M))
    S = sympy.Matrix(M)
    if S.det() == 0:
        assert inv is None
    else:
        assert [[sympy.Rational(str(x)) for x in row] for row in inv] == S.inv().tolist()


@given(st.integers(1, 4).flatmap(lambda r: matrices(r, 4)), st.sampled_from([2, 3, 5, 7]))
def test_rank_mod_p_matches_oracle(M, p):
    F = Field(p)
    assert rank(F, F.array(M)) == oracles.rank(M, p)
