"""The small q-difference system of the quintic.

Matrices are 4x4 arrays of :class:`QSeries`, rows indexed by the x^a
coordinate.  Indices are 0-based in code: the 1-based D_{1,3} is ``D[0][2]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gv import GVTable, KernelKind, bracket, gw_from_gv
from .kring import DIM, KSeries
from .scalars import ONE, ONE_MINUS_Q, ZERO, QRatFun, proj_red
from .series import LogSeries, QSeries, TruncationError, solve_delta


class BirkhoffError(ArithmeticError):
    """The input does not admit the requested factorization."""


class SeriesMatrix:
    """A DIM x DIM matrix of QSeries sharing one truncation order."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != DIM or any(len(r) != DIM for r in rows):
            raise ValueError(f"expected a {DIM}x{DIM} matrix")
        orders = {e.order for r in rows for e in r}
        if len(orders) != 1:
            raise TruncationError("matrix entries must share one truncation order")
        self.rows = rows

    @classmethod
    def identity(cls, order: int) -> "SeriesMatrix":
        return cls(
            [[QSeries.one(order) if i == j else QSeries.zero(order) for j in range(DIM)] for i in range(DIM)]
        )

    @classmethod
    def from_coefficients(cls, mats) -> "SeriesMatrix":
        """Build from a list (over Q-degree) of DIM x DIM QRatFun matrices."""
        return cls([[QSeries._make(m[i][j] for m in mats) for j in range(DIM)] for i in range(DIM)])

    @property
    def order(self) -> int:
        return self.rows[0][0].order

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            i, j = ij
            return self.rows[i][j]
        return self.rows[ij]

    def coefficient(self, n: int):
        """The DIM x DIM matrix of Q^n coefficients."""
        return [[self.rows[i][j][n] for j in range(DIM)] for i in range(DIM)]

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        return SeriesMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return SeriesMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if isinstance(other, SeriesMatrix):
            out = []
            for i in range(DIM):
                row = []
                for j in range(DIM):
                    acc = QSeries.zero(self.order)
                    for k in range(DIM):
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return SeriesMatrix(out)
        return SeriesMatrix([[a.scale(other) for a in r] for r in self.rows])

    def transpose(self) -> "SeriesMatrix":
        return SeriesMatrix([[self.rows[j][i] for j in range(DIM)] for i in range(DIM)])

    def map(self, fn) -> "SeriesMatrix":
        return SeriesMatrix([[fn(a) for a in r] for r in self.rows])

    def __repr__(self):
        return f"SeriesMatrix(order={self.order})"


Matrix4Series = SeriesMatrix


def _mat_mul(A, B):
    out = [[ZERO] * DIM for _ in range(DIM)]
    for i in range(DIM):
        for k in range(DIM):
            a = A[i][k]
            if a.is_zero():
                continue
            for j in range(DIM):
                b = B[k][j]
                if not b.is_zero():
                    out[i][j] = out[i][j] + a * b
    return out


def _mat_inverse(A):
    """Gauss-Jordan inverse over Q(q)."""
    n = len(A)
    M = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(A)]
    for c in range(n):
        p = next((r for r in range(c, n) if not M[r][c].is_zero()), None)
        if p is None:
            raise BirkhoffError("singular leading matrix")
        M[c], M[p] = M[p], M[c]
        inv = M[c][c].inverse()
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and not M[r][c].is_zero():
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


def _is_laurent(f: QRatFun) -> bool:
    if f.is_zero():
        return True
    den = f.den
    return den.degree() == 0 or all(c == 0 for c in den.coeffs()[:-1])


def shifted_matrix(J: KSeries, N: int | None = None) -> SeriesMatrix:
    """Columns ((1-x)E)^j J / (1-q) for j = 0..3, in x^a coordinates."""
    if N is not None and N != J.order:
        J = J.truncate(N)
    base = J.scale(ONE / ONE_MINUS_Q)
    cols = [base]
    for _ in range(1, DIM):
        cols.append(cols[-1].twisted_shift())
    return SeriesMatrix([[cols[j].component(i) for j in range(DIM)] for i in range(DIM)])


def birkhoff(M: SeriesMatrix):
    """Factor M = T U with T = I + O(Q) reduced and U Laurent in q.

    Degree by degree: with K_n = M_n - sum_{0<j<n} T_j U_{n-j},
    T_n = proj_red(K_n U_0^{-1}) and U_n = K_n - T_n U_0.
    """
    N = M.order
    U0 = M.coefficient(0)
    for row in U0:
        for e in row:
            if not _is_laurent(e):
                raise BirkhoffError("leading coefficient matrix must have Laurent entries")
    U0inv = _mat_inverse(U0)
    I = [[ONE if i == j else ZERO for j in range(DIM)] for i in range(DIM)]
    Ts, Us = [I], [U0]
    for n in range(1, N + 1):
        K = M.coefficient(n)
        for j in range(1, n):
            P = _mat_mul(Ts[j], Us[n - j])
            K = [[a - b for a, b in zip(r, s)] for r, s in zip(K, P)]
        W = _mat_mul(K, U0inv)
        Tn = [[proj_red(w) for w in r] for r in W]
        TU0 = _mat_mul(Tn, U0)
        Un = [[a - b for a, b in zip(r, s)] for r, s in zip(K, TU0)]
        for i in range(DIM):
            for j in range(DIM):
                if not _is_laurent(Un[i][j]):
                    raise BirkhoffError(f"U entry ({i},{j}) at Q^{n} is not a Laurent polynomial")
        Ts.append(Tn)
        Us.append(Un)
    return SeriesMatrix.from_coefficients(Ts), SeriesMatrix.from_coefficients(Us)


def t_matrix_closed(gv: GVTable, N: int) -> SeriesMatrix:
    one, zero = QSeries.one(N), QSeries.zero(N)
    A, B = bracket(KernelKind.A, gv, N), bracket(KernelKind.B, gv, N)
    C, E = bracket(KernelKind.C, gv, N), bracket(KernelKind.Eker, gv, N)
    return SeriesMatrix(
        [
            [one, zero, zero, zero],
            [zero, one, zero, zero],
            [A, C, one, zero],
            [B, E, zero, one],
        ]
    )


def d_matrix_closed(gv: GVTable, N: int) -> SeriesMatrix:
    one, zero = QSeries.one(N), QSeries.zero(N)
    d13 = bracket(KernelKind.D13, gv, N)
    d14 = bracket(KernelKind.D14, gv, N)
    d23 = bracket(KernelKind.D23, gv, N)
    d24 = bracket(KernelKind.D24, gv, N)
    return SeriesMatrix(
        [
            [zero, one, d13, d14],
            [zero, zero, one + d23, d24],
            [zero, zero, zero, one],
            [zero, zero, zero, zero],
        ]
    )


def a_matrix_closed(gv: GVTable, N: int) -> SeriesMatrix:
    """A = I - D^T."""
    return SeriesMatrix.identity(N) - d_matrix_closed(gv, N).transpose()


@dataclass(frozen=True)
class YukawaSeries:
    quantum: QSeries
    classical: QSeries


def yukawa(gv: GVTable, N: int) -> YukawaSeries:
    """c_ttt(Q, q) = 5 (1 + [D23]) and c_ttt(Q) = 5 + sum_n n^3 GW_n Q^n."""
    quantum = (QSeries.one(N) + bracket(KernelKind.D23, gv, N)).scale(QRatFun.const(5))
    for n, c in enumerate(quantum):
        if not c.is_polynomial():
            raise ArithmeticError(f"c_ttt coefficient of Q^{n} is not a polynomial in q")
    gw = gw_from_gv(gv)
    classical = [QRatFun.const(5)]
    for n in range(1, N + 1):
        classical.append(QRatFun.const(gw[n] * n**3))
    return YukawaSeries(quantum, QSeries(N, classical))


@dataclass(frozen=True)
class ScalarOperatorChain:
    """y -> Delta( outer * Delta( inner * Delta^2 y ) ).

    inner = (gamma + Delta alpha)^-1 and outer = (1 + Delta h)^-1 with
    h = (delta + E alpha + Delta beta) * inner; Delta and E act on the entry
    series themselves.
    """

    inner: QSeries
    outer: QSeries

    def apply(self, y):
        t = y.delta().delta()
        t = t * self.inner
        t = t.delta()
        t = t * self.outer
        return t.delta()

    __call__ = apply


def _entries(D: SeriesMatrix):
    return D[0, 2], D[0, 3], D[1, 2], D[1, 3]


def scalar_operator(D: SeriesMatrix) -> ScalarOperatorChain:
    alpha, beta, gamma, delta = _entries(D)
    if gamma[0] != ONE:
        raise ValueError("gamma must have constant term 1")
    base = gamma + alpha.delta()
    inner = base.invert()
    h = (delta + alpha.e_shift() + beta.delta()) * inner
    outer = (QSeries.one(D.order) + h.delta()).invert()
    return ScalarOperatorChain(inner=inner, outer=outer)


def _lift(s: QSeries, J: int) -> LogSeries:
    return LogSeries.from_series(s, J)


def solution_space(D: SeriesMatrix, lambda_bound: int = 3):
    """Four solutions (y0, y1, y2, y3) of Delta y = D y in the log-extended ring."""
    if lambda_bound < 3:
        raise ValueError("lambda_bound must be at least 3")
    N, J = D.order, lambda_bound
    alpha, beta, gamma, delta = _entries(D)
    one = LogSeries(N, J, {(0, 0): ONE})
    zero = LogSeries(N, J)
    a, b, g, d = (_lift(s, J) for s in (alpha, beta, gamma, delta))

    s0 = (one, zero, zero, zero)
    s1 = (solve_delta(one), one, zero, zero)
    y1 = solve_delta(g)
    s2 = (solve_delta(y1 + a), y1, one, zero)
    y2 = solve_delta(one)
    y1 = solve_delta(g * y2 + d)
    y0 = solve_delta(y1 + a * y2 + b)
    s3 = (y0, y1, y2, one)
    return (s0, s1, s2, s3)


def system_residual(D: SeriesMatrix, ys):
    """Delta y - D y for one 4-tuple of LogSeries."""
    out = []
    for i in range(DIM):
        acc = ys[i].delta()
        for j in range(DIM):
            e = D[i, j]
            if not e.is_zero():
                acc = acc - ys[j] * e
        out.append(acc)
    return tuple(out)


def q_one_limits(series: QSeries, k: int = 0):
    """limit_q1 of every coefficient."""
    from .scalars import limit_q1

    return [limit_q1(c, k) for c in series]
