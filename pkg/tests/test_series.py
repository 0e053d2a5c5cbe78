import pytest
from hypothesis import given, strategies as st

from conftest import ratfuns
from qkquintic.scalars import ONE, ONE_MINUS_Q, QRatFun
from qkquintic.series import (
    LogSeries,
    QDiffOp,
    QSeries,
    TruncationError,
    e_shift,
    log_e_shift,
    op_apply,
    op_compose,
    series_arith,
    series_exp,
    series_invert,
    solve_delta,
)

q = QRatFun.q


@st.composite
def qseries(draw, order=3):
    return QSeries(order, [draw(ratfuns(max_deg=2)) for _ in range(order + 1)])


@st.composite
def ops(draw, order=2):
    terms = {s: draw(qseries(order)) for s in range(draw(st.integers(0, 2)) + 1)}
    return QDiffOp(order, terms)


def test_invert_geometric():
    a = QSeries(3, [1, -1])
    assert series_invert(a) == QSeries(3, [1, 1, 1, 1])


def test_exp():
    c = QRatFun.from_poly([2, 1])
    assert series_exp(QSeries(2, {1: c})) == QSeries(2, [ONE, c, c * c / 2])
    with pytest.raises(ValueError):
        series_exp(QSeries(2, [1]))


def test_non_unit_invert():
    with pytest.raises(ZeroDivisionError):
        series_invert(QSeries(2, {1: 1}))


@given(qseries().filter(lambda s: not s[0].is_zero()))
def test_inverse_property(a):
    assert series_arith(a, series_invert(a), "mul") == QSeries.one(a.order)


def test_mixed_orders_rejected():
    with pytest.raises(TruncationError):
        QSeries(2, [1]) + QSeries(3, [1])


def test_e_shift_examples():
    assert e_shift(QSeries(3, {1: 1})) == QSeries(3, {1: q(1)})
    assert e_shift(QSeries.one(3)) == QSeries.one(3)
    assert e_shift(QSeries(3, {2: ONE / ONE_MINUS_Q})) == QSeries(3, {2: q(2) / ONE_MINUS_Q})


@given(qseries(), qseries())
def test_e_shift_homomorphism_and_leibniz(f, g):
    assert (f * g).e_shift() == f.e_shift() * g.e_shift()
    D = lambda s: s.delta()  # noqa: E731
    assert D(f * g) == D(f) * g + f * D(g) - D(f) * D(g)


def test_log_e_shift_examples():
    lam = LogSeries.lam(2, 2)
    assert log_e_shift(lam) == LogSeries(2, 2, {(0, 1): 1, (0, 0): 1})
    Ql = LogSeries(2, 2, {(1, 1): 1})
    assert log_e_shift(Ql) == LogSeries(2, 2, {(1, 1): q(1), (1, 0): q(1)})
    one = LogSeries(2, 2, {(0, 0): 1})
    assert log_e_shift(one) == one


def test_solve_delta_examples():
    one = LogSeries(3, 3, {(0, 0): 1})
    assert solve_delta(one) == LogSeries(3, 3, {(0, 1): -1})
    assert solve_delta(LogSeries(3, 3)).is_zero()
    assert solve_delta(LogSeries(3, 3, {(1, 0): 1})) == LogSeries(3, 3, {(1, 0): ONE / ONE_MINUS_Q})


def test_solve_delta_bound():
    with pytest.raises(TruncationError):
        solve_delta(LogSeries(2, 1, {(0, 1): 1}))


@given(st.lists(ratfuns(max_deg=2), min_size=12, max_size=12))
def test_solve_delta_inverts_delta(cs):
    N, J = 3, 3
    terms = {(n, j): cs[3 * n + j] for n in range(N + 1) for j in range(J) if 3 * n + j < 12}
    terms = {k: v for k, v in terms.items() if k[0] > 0 or k[1] < J}
    rhs = LogSeries(N, J, terms)
    y = solve_delta(rhs)
    assert y.delta() == rhs
    assert y[0, 0].is_zero()


def test_op_examples():
    N = 3
    QE = QDiffOp(N, {1: QSeries(N, {1: 1})})
    assert op_apply(QE, QSeries(N, {1: 1})) == QSeries(N, {2: q(1)})
    E = QDiffOp.shift(N)
    Qmul = QDiffOp.multiplication(QSeries(N, {1: 1}))
    assert op_compose(E, Qmul) == QDiffOp(N, {1: QSeries(N, {1: q(1)})})
    a = QSeries(N, [1, 2, 3])
    assert op_apply(QDiffOp.identity(N), a) == a


@given(ops(), ops(), ops())
def test_compose_associative(P, R, S):
    assert op_compose(op_compose(P, R), S) == op_compose(P, op_compose(R, S))


@given(ops(), ops(), qseries(2))
def test_compose_matches_apply(P, R, a):
    assert op_apply(op_compose(P, R), a) == op_apply(P, op_apply(R, a))


def test_op_on_log_series():
    N = 2
    D = QDiffOp(N, {0: ONE, 1: -ONE})
    lam2 = LogSeries.lam(N, 3, 2)
    # (1-E) lam^2 = -2 lam - 1
    assert op_apply(D, lam2) == LogSeries(N, 3, {(0, 1): -2, (0, 0): -1})


def test_log_overflow():
    lam = LogSeries.lam(1, 2, 2)
    with pytest.raises(TruncationError):
        lam * lam
