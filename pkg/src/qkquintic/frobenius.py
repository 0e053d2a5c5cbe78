"""The q-Frobenius method for the 25th order operator of the quintic.

The x-deformed series J(Q,q,x) = sum_n a_n(q,x) Q^n with
a_n = (e^(5x) q; q)_(5n) / (e^x q; q)_n^5 is annihilated (mod x^4) by
L5(e^x E), where L5 = (1-E)^5 - Q prod_{j=1}^5 (1 - q^j E^5).  Expanding in x
gives four relations between the operator derivatives of L5 and the Taylor
coefficients of J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .kring import KElem, KSeriesType
from .scalars import ONE, ZERO, QRatFun
from .series import LogSeries, QDiffOp, QSeries, op_apply, op_derivative, op_left_divmod

XDIM = 4


def q_harmonic(n: int) -> QRatFun:
    """H_n(q) = sum_{j=1}^n q^j / (1 - q^j)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = ZERO
    for j in range(1, n + 1):
        s = s + QRatFun.q(j) / (ONE - QRatFun.q(j))
    return s


def exp_poly(a: int, dim: int = XDIM) -> KElem:
    """e^(a x) as its Taylor polynomial mod x^dim."""
    return KElem([Fraction(a**k, factorial(k)) for k in range(dim)], dim)


@dataclass(frozen=True)
class FrobeniusData:
    """Taylor data of J(Q,q,x) through Q^order.

    ``J[k]`` is the k-th x-derivative at x = 0 (k! times the Taylor
    coefficient ``taylor[k]``); the binomial relations hold in this
    normalization.
    """

    order: int
    J: tuple
    taylor: tuple
    summands: tuple  # a_n(q, x) as KElem in Q(q)[x]/(x^4)


def frobenius_data(M: int) -> FrobeniusData:
    if M < 0:
        raise ValueError("order must be nonnegative")
    e1, e5 = exp_poly(1), exp_poly(5)
    one = KElem.one()
    a = one
    summands = [a]
    for n in range(1, M + 1):
        for i in range(5 * n - 4, 5 * n + 1):
            a = a * (one - e5.scale_q(i))
        a = a * ((one - e1.scale_q(n)) ** 5).inverse()
        summands.append(a)
    taylor = tuple(QSeries(M, [s[k] for s in summands]) for k in range(XDIM))
    J = tuple(t.scale(QRatFun.const(factorial(k))) for k, t in enumerate(taylor))
    return FrobeniusData(order=M, J=J, taylor=taylor, summands=tuple(summands))


def l5_operator(M: int) -> QDiffOp:
    """(1-E)^5 - Q prod_{j=1}^5 (1 - q^j E^5), truncated at Q^M."""
    terms = {}
    for j in range(6):
        terms[j] = {0: QRatFun.const(comb(5, j) * (-1) ** j)}
    # prod_j (1 - q^j y) as a polynomial in y = E^5
    prod = [ONE]
    for j in range(1, 6):
        nxt = [ZERO] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c.scale_q(j)
        prod = nxt
    if M >= 1:
        for i, c in enumerate(prod):
            terms.setdefault(5 * i, {})[1] = -c
    return QDiffOp(M, {s: QSeries(M, cs) for s, cs in terms.items()})


def frobenius_residual(n: int, data: FrobeniusData) -> QSeries:
    """sum_{k=0}^n C(n,k) L5^(k) J_(n-k); vanishes through Q^(M-1)."""
    if not 0 <= n < XDIM:
        raise ValueError("n must be in 0..3")
    L = l5_operator(data.order)
    out = QSeries.zero(data.order)
    for k in range(n + 1):
        out = out + op_apply(op_derivative(L, k), data.J[n - k]).scale(QRatFun.const(comb(n, k)))
    return out


def twisted_l5_apply(data: FrobeniusData):
    """L5(e^x E, Q, q) applied to J(Q,q,x), as a series over Q(q)[x]/(x^4).

    Equals (1 - e^x)^5 = 0 mod x^4 exactly through the data order.
    """
    M = data.order
    L = l5_operator(M)
    cls = KSeriesType(XDIM)
    out = [KElem.zero()] * (M + 1)
    for s, c in L.terms.items():
        es = exp_poly(s)
        for e in range(M + 1):
            ce = c[e]
            if ce.is_zero():
                continue
            for n in range(M + 1 - e):
                out[n + e] = out[n + e] + (es * data.summands[n]).scale_q(s * n) * ce
    return cls(M, out)


def frobenius_solutions(data: FrobeniusData, lambda_bound: int = 3) -> tuple:
    """f_n = sum_k C(n,k) lam^(n-k) J_k for n = 0..3.

    With lam = log Q / log q these are the logarithmic solutions divided by
    (log q)^n.
    """
    if lambda_bound < 3:
        raise ValueError("lambda_bound must be at least 3")
    out = []
    for n in range(XDIM):
        f = LogSeries(data.order, lambda_bound)
        for k in range(n + 1):
            f = f + LogSeries.from_series(data.J[k].scale(QRatFun.const(comb(n, k))), lambda_bound, n - k)
        out.append(f)
    return tuple(out)


def solution_residuals(data: FrobeniusData, lambda_bound: int = 3) -> tuple:
    L = l5_operator(data.order)
    return tuple(op_apply(L, f) for f in frobenius_solutions(data, lambda_bound))


def l5_factor(M: int):
    """Left-divide L5 by (1 - E): returns (quotient, remainder)."""
    D = QDiffOp(M, {0: ONE, 1: -ONE})
    return op_left_divmod(l5_operator(M), D)


def vanishes_below(s, n: int) -> bool:
    """True if every coefficient of Q^k, k < n, is zero."""
    if isinstance(s, LogSeries):
        return all(k >= n for (k, _), _c in s.items())
    return all(s[k].is_zero() for k in range(min(n, s.order + 1)))
