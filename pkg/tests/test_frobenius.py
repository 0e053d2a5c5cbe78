from math import comb

import pytest

from qkquintic.frobenius import (
    exp_poly,
    frobenius_data,
    frobenius_residual,
    frobenius_solutions,
    l5_factor,
    l5_operator,
    q_harmonic,
    solution_residuals,
    twisted_l5_apply,
    vanishes_below,
)
from qkquintic.scalars import ONE, QRatFun, q_pochhammer
from qkquintic.series import LogSeries, QDiffOp, QSeries, op_apply, op_compose, op_derivative

q = QRatFun.q


@pytest.fixture(scope="module")
def data8():
    return frobenius_data(8)


def test_q_harmonic():
    assert q_harmonic(0).is_zero()
    assert q_harmonic(1) == q(1) / (ONE - q(1))
    assert q_harmonic(2) == q(1) / (ONE - q(1)) + q(2) / (ONE - q(2))


def test_j0_coefficients(data8):
    for n in range(9):
        assert data8.J[0][n] == QRatFun(q_pochhammer(5 * n)) / QRatFun(q_pochhammer(n)) ** 5
    assert [data8.J[k][0] for k in range(4)] == [ONE, 0, 0, 0]


def test_j1_harmonic_form(data8):
    for n in range(9):
        a = data8.J[0][n]
        assert data8.J[1][n] == a * 5 * (q_harmonic(n) - q_harmonic(5 * n))


def test_taylor_normalization(data8):
    assert data8.J[3] == data8.taylor[3].scale(QRatFun.const(6))


def test_l5_examples():
    L = l5_operator(3)
    assert L.coefficient(0) == QSeries(3, [1, -1])
    one = QSeries.one(3)
    prod = ONE
    for j in range(1, 6):
        prod = prod * (ONE - q(j))
    assert op_apply(L, one) == QSeries(3, {1: -prod})
    assert L.support() == set(range(6)) | {10, 15, 20, 25}


def test_op_derivative_examples():
    N = 2
    assert op_derivative(QDiffOp.shift(N, 3), 2) == QDiffOp(N, {3: QRatFun.const(9)})
    L = l5_operator(N)
    assert op_derivative(L, 0) == L
    P = QDiffOp(N, {j: QRatFun.const(comb(5, j) * (-1) ** j) for j in range(6)})
    assert op_derivative(P, 1) == QDiffOp(N, {j: QRatFun.const(comb(5, j) * (-1) ** j * j) for j in range(6)})


def test_product_rule():
    N = 2
    P = QDiffOp(N, {0: QSeries(N, [1, 2]), 2: QSeries(N, [0, q(1)])})
    R = QDiffOp(N, {1: QSeries(N, [3, 0, 1]), 3: QSeries(N, [ONE - q(1)])})
    lhs = op_derivative(op_compose(P, R), 1)
    rhs = op_compose(op_derivative(P, 1), R) + op_compose(P, op_derivative(R, 1))
    assert lhs == rhs


@pytest.mark.parametrize("n", range(4))
def test_residuals(data8, n):
    assert vanishes_below(frobenius_residual(n, data8), data8.order)


def test_plain_taylor_needs_derivative_form(data8):
    # the binomial identity fails with bare Taylor coefficients
    from dataclasses import replace

    raw = replace(data8, J=data8.taylor)
    assert not frobenius_residual(2, raw).is_zero()


def test_twisted_identity(data8):
    assert twisted_l5_apply(data8).is_zero()


def test_solutions(data8):
    f = frobenius_solutions(data8)
    assert f[0] == LogSeries.from_series(data8.J[0], 3)
    lam = LogSeries.lam(8, 3)
    assert f[1] == lam * data8.J[0] + LogSeries.from_series(data8.J[1], 3)
    assert all(vanishes_below(r, 8) for r in solution_residuals(data8))


def test_divisibility():
    R, S = l5_factor(6)
    assert S.is_zero()
    assert R.shift_order == 24
    D = QDiffOp(6, {0: ONE, 1: -ONE})
    assert op_compose(D, R) == l5_operator(6)


def test_exp_poly():
    assert exp_poly(2).coords[3] == QRatFun.const(QRatFun.const(8).constant_value() / 6)
