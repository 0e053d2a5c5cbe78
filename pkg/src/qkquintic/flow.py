"""From the I-function of the quintic to its small J-function.

The I-function ``J(Q,q,t*)`` lies on the K-theoretic Lagrangian cone.  The
small J-function is obtained by the plethystic flow

    J(Q,q,0) = exp( sum_{r,k,l} eps_{k,l}(q^r) / (r (1-q^r)) Q^{rk} ((1-x)E)^{lr} ) J(Q,q,t*)

where the Laurent polynomials eps_{k,l} are fixed one Q-degree at a time by
asking every coefficient of the result (in Q-degree >= 1) to be reduced.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .kring import DIM, KElem, KSeries, KSeriesType, one_minus_x_power
from .scalars import ONE, ONE_MINUS_Q, ZERO, QLaurent, QRatFun, is_reduced, proj_pol

log = logging.getLogger(__name__)


class FlowError(ArithmeticError):
    """A solved flow coefficient violated its expected form."""


@dataclass
class EpsilonTable:
    """eps_{k,l}(q) for Q-degrees k >= 1 and l = 0..3."""

    entries: dict = field(default_factory=dict)

    def __getitem__(self, key) -> QLaurent:
        return self.entries[key]

    def __setitem__(self, key, value: QLaurent):
        k, l = key
        if k < 1 or not 0 <= l < DIM:
            raise KeyError(key)
        self.entries[key] = value

    def __contains__(self, key):
        return key in self.entries

    def __len__(self):
        return len(self.entries)

    def max_degree(self) -> int:
        return max((k for k, _ in self.entries), default=0)

    def items(self):
        return sorted(self.entries.items())


@dataclass(frozen=True)
class FlowMonomial:
    """The operator f -> scale * (1-x)^b Q^a f(q^b Q)."""

    scale: QRatFun
    q_power_of_shift: int
    q_degree: int
    x_power: int

    def __post_init__(self):
        if self.q_degree < 1:
            raise ValueError("flow monomials must raise the Q-degree")

    def apply(self, s):
        out = s.e_shift(self.q_power_of_shift).mul_one_minus_x_power(self.x_power)
        return out.mul_q_monomial(self.q_degree).scale(self.scale)


def i_function(N: int) -> KSeries:
    """(1-q) sum_{d<=N} ((1-x)^5 q; q)_{5d} / ((1-x) q; q)_d^5 Q^d mod x^4."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    y = KElem([1, -1])
    y5 = y**5
    term = KElem.scalar(ONE_MINUS_Q)
    coeffs = [term]
    for d in range(1, N + 1):
        for i in range(5 * d - 4, 5 * d + 1):
            term = term * (KElem.one() - y5.scale_q(i))
        den = (KElem.one() - y.scale_q(d)) ** 5
        term = term * den.inverse()
        coeffs.append(term)
    return KSeries(N, coeffs)


def adams(r: int, s):
    """psi^(r): (1-x)^i f(q) Q^j -> (1-x)^(ri) f(q^r) Q^(rj), re-truncated."""
    if r < 1:
        raise ValueError("Adams operations need r >= 1")
    if r == 1:
        return s
    cls = type(s)
    dim = cls.ring_dim
    N = s.order
    out = [KElem.zero(dim)] * (N + 1)
    for n, c in enumerate(s):
        if r * n > N or c.is_zero():
            continue
        ys = c.to_one_minus_x_basis()
        acc = KElem.zero(dim)
        for i, ci in enumerate(ys):
            if not ci.is_zero():
                acc = acc + KElem._make(tuple(ci.subs_power(r) * v for v in one_minus_x_power(r * i, dim)))
        out[r * n] = acc
    return cls._make(out)


def flow_monomials(eps: EpsilonTable, N: int) -> list:
    """The summands of the flow exponent up to Q-degree N, merged by (a, b)."""
    merged = {}
    for (k, l), e in eps.items():
        if k > N or e.is_zero():
            continue
        f = e.to_ratfun()
        for r in range(1, N // k + 1):
            key = (r * k, l * r)
            scale = f.subs_power(r) / ((ONE - QRatFun.q(r)) * r)
            merged[key] = merged[key] + scale if key in merged else scale
    return [FlowMonomial(scale=c, q_power_of_shift=b, q_degree=a, x_power=b)
            for (a, b), c in sorted(merged.items()) if not c.is_zero()]


def _apply_sum(monos, s):
    """Apply sum of flow monomials to s, one target coefficient at a time."""
    cls = type(s)
    N = s.order
    dim = cls.ring_dim
    coeffs = s.coefficients()
    out = [KElem.zero(dim)] * (N + 1)
    for mono in monos:
        a, b, scale = mono.q_degree, mono.q_power_of_shift, mono.scale
        cs = one_minus_x_power(mono.x_power, dim)
        for m in range(N + 1 - a):
            c = coeffs[m]
            if c.is_zero():
                continue
            out[m + a] = out[m + a] + c.scale_q(b * m).mul_int(cs) * scale
    return cls._make(out)


def flow_apply(eps: EpsilonTable, s, N: int | None = None):
    """exp(A) s with A the flow exponent built from ``eps``."""
    N = s.order if N is None else N
    if N != s.order:
        s = s.truncate(N)
    monos = flow_monomials(eps, N)
    if not monos:
        return s
    out = s
    term = s
    for m in range(1, N + 1):
        term = _apply_sum(monos, term).scale(QRatFun.const(Fraction(1, m)))
        if term.is_zero():
            break
        out = out + term
    return out


def _solve_unknowns(rhs, order):
    """Solve sum_l C(l,i)(-1)^i e_l = rhs_i (i = 0..3) by Gauss-Jordan.

    Equations are eliminated in the sequence ``order``; the answer does not
    depend on it.
    """
    n = len(rhs)
    rows = {i: ([Fraction(comb(l, i) * (-1) ** i) for l in range(n)], rhs[i]) for i in range(n)}
    pivots = {}
    for i in order:
        coeffs, r = rows[i]
        col = next((l for l in range(n) if coeffs[l] != 0 and l not in pivots.values()), None)
        if col is None:
            raise FlowError("singular flow system")
        p = coeffs[col]
        coeffs = [c / p for c in coeffs]
        r = r * QRatFun.const(1 / p)
        rows[i] = (coeffs, r)
        pivots[i] = col
        for j in rows:
            if j == i or rows[j][0][col] == 0:
                continue
            cj, rj = rows[j]
            f = cj[col]
            rows[j] = ([a - f * b for a, b in zip(cj, coeffs)], rj - r * QRatFun.const(f))
    sol = [ZERO] * n
    for i, col in pivots.items():
        sol[col] = rows[i][1]
    return sol


def solve_epsilon(N: int, elimination_order=(3, 2, 1, 0), progress=None):
    """Solve the flow degree by degree; return ``(EpsilonTable, J(Q,q,0))``.

    Only eps_{n,*} enters the Q^n coefficient through the r = 1 term acting on
    the constant (1-q), contributing sum_l eps_{n,l}(q) (1-x)^l.  Requiring
    the Q^n coefficient to be reduced therefore fixes eps_n from the Laurent
    part of everything else.
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    if sorted(elimination_order) != list(range(DIM)):
        raise ValueError("elimination_order must be a permutation of 0..3")
    eps = EpsilonTable()
    I = i_function(N)
    J_coeffs = [I[0]]
    for n in range(1, N + 1):
        known = flow_apply(eps, I.truncate(n))[n]
        pol = [proj_pol(c).to_ratfun() for c in known.coords]
        sol = _solve_unknowns([-p for p in pol], elimination_order)
        for l, e in enumerate(sol):
            if not e.is_polynomial():
                raise FlowError(f"eps_{n},{l} is not a Laurent polynomial in q: {e}")
            lau = QLaurent.from_poly(e.num)
            if not lau.is_polynomial():
                raise FlowError(f"eps_{n},{l} has negative powers of q")
            eps[n, l] = lau
        Jn = known + KElem.from_one_minus_x_basis(sol)
        for a, c in enumerate(Jn.coords):
            if not is_reduced(c):
                raise FlowError(f"coefficient x^{a} Q^{n} of J is not reduced: {c}")
        J_coeffs.append(Jn)
        log.info("solved flow through Q^%d", n)
        if progress is not None:
            progress(n)
    return eps, KSeries(N, J_coeffs)


def cpn_small_j(dim: int, order: int):
    """(1-q) sum_d Q^d / ((1-x) q; q)_d^(dim+1) in Q(q)[x]/(x^(dim+1))."""
    if dim < 1:
        raise ValueError("projective space dimension must be >= 1")
    ring = dim + 1
    cls = KSeriesType(ring)
    y = KElem([1, -1], ring)
    term = KElem.scalar(ONE_MINUS_Q, ring)
    coeffs = [term]
    for d in range(1, order + 1):
        term = term * ((KElem.one(ring) - y.scale_q(d)) ** ring).inverse()
        coeffs.append(term)
    return cls(order, coeffs)
