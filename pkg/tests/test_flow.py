from itertools import permutations

import pytest

from qkquintic.flow import (
    EpsilonTable,
    FlowError,
    FlowMonomial,
    adams,
    cpn_small_j,
    flow_apply,
    i_function,
    solve_epsilon,
)
from qkquintic.kring import KElem, KSeries
from qkquintic.scalars import ONE, ONE_MINUS_Q, QLaurent, QRatFun, is_reduced, q_pochhammer

q = QRatFun.q
EPS1 = {
    0: [1724, 572, -625, -1941, -3430, -4952, -6223, -6755, -6184, -4690, -2747, -969],
    3: [-1150, 10, 1250, 2670, 4340, 6080, 7540, 8120, 7390, 5575, 3250, 1140],
}


def test_i_function_low_terms():
    I = i_function(2)
    assert I[0] == KElem.scalar(ONE_MINUS_Q)
    x0 = QRatFun(q_pochhammer(5)) / QRatFun(q_pochhammer(1)) ** 5 * ONE_MINUS_Q
    assert I[1][0] == x0
    expected = (ONE + q(1)) ** 2 * QRatFun.from_poly([1, 1, 1]) * QRatFun.from_poly([1, 0, 1])
    assert x0 == ONE_MINUS_Q * expected * QRatFun.from_poly([1, 1, 1, 1, 1])


def test_pochhammer_factor():
    y5 = KElem([1, -1]) ** 5
    assert KElem.one() - y5.scale_q(1) == KElem([ONE - q(1), 5 * q(1), -10 * q(1), 10 * q(1)])


def test_cone_identity():
    N = 5
    I = i_function(N)
    lhs = I - KSeries(N, {0: KElem.scalar(ONE_MINUS_Q)})
    for _ in range(5):
        lhs = lhs - lhs.twisted_shift()
    rhs = I
    for j in range(1, 6):
        rhs = rhs - rhs.twisted_shift(5).scale(q(j))
    assert lhs == rhs.mul_q_monomial(1)


def test_adams_examples():
    N = 4
    f = ONE / ONE_MINUS_Q
    s = KSeries(N, {1: KElem([1, -1]) * f})
    assert adams(2, s) == KSeries(N, {2: KElem([1, -2, 1]) * f.subs_power(2)})
    assert adams(1, s) == s
    assert adams(2, KSeries(N, {1: KElem.basis(1)})) == KSeries(N, {2: KElem([0, 2, -1])})


def test_flow_apply_examples():
    s = KSeries.one(2)
    assert flow_apply(EpsilonTable(), s) == s
    c = QRatFun.from_poly([3, 1])
    eps = EpsilonTable()
    eps[1, 0] = QLaurent.from_poly(c.num)
    out = flow_apply(eps, s)
    U = ONE_MINUS_Q
    expected2 = c * c / (2 * U * U) + c.subs_power(2) / (2 * (ONE - q(2)))
    assert out == KSeries(2, [KElem.one(), KElem.scalar(c / U), KElem.scalar(expected2)])


def test_flow_monomial_requires_degree():
    with pytest.raises(ValueError):
        FlowMonomial(ONE, 0, 0, 0)


def test_epsilon_degree_one():
    eps, J = solve_epsilon(1)
    for l, cs in EPS1.items():
        assert eps[1, l].to_ratfun() == QRatFun.from_poly(cs)
    assert J[0] == KElem.scalar(ONE_MINUS_Q)


def test_j1_matches_closed_form():
    _, J = solve_epsilon(1)
    m = QRatFun.from_poly([-1, 1])
    assert J[1] == KElem([0, 0, -575 / m, -1150 * QRatFun.from_poly([-1, 2]) / m**2])


def test_output_reduced(flow6):
    eps, J = flow6
    for n in range(1, J.order + 1):
        assert all(is_reduced(c) for c in J[n].coords)
    for (_, _), e in eps.items():
        assert e.is_polynomial()


def test_elimination_order_irrelevant():
    ref = solve_epsilon(3)
    for order in permutations(range(4)):
        eps, J = solve_epsilon(3, elimination_order=order)
        assert eps.entries == ref[0].entries and J == ref[1]


def test_bad_elimination_order():
    with pytest.raises(ValueError):
        solve_epsilon(1, elimination_order=(0, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projective_space_recursion(n):
    J = cpn_small_j(n, 10)
    lhs = J
    for _ in range(n + 1):
        lhs = lhs - lhs.twisted_shift()
    assert lhs == J.mul_q_monomial(1)


def test_projective_space_examples():
    J = cpn_small_j(1, 3)
    assert J[0] == KElem.scalar(ONE_MINUS_Q, 2)
    assert J[1][0] == ONE / ONE_MINUS_Q


def test_flow_error_type():
    assert issubclass(FlowError, ArithmeticError)
