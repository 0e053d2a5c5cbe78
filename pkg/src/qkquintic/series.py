"""Truncated series in the Novikov variable Q and linear q-difference operators.

``QSeries`` holds coefficients of Q^0..Q^N in Q(q).  ``LogSeries`` adds a
formal symbol ``lam`` standing for log Q / log q, on which the shift
``E: Q -> qQ`` acts by ``lam -> lam + 1``.  ``QDiffOp`` is a finite sum
``sum_s c_s(Q) E^s`` kept in normal order (coefficients to the left).

Series of different truncation orders never mix silently; use
:meth:`TruncatedSeries.truncate` explicitly.
"""

from __future__ import annotations

from math import comb

from .scalars import ONE, ZERO, QRatFun


class TruncationError(ValueError):
    """Raised when series of different truncation orders are combined."""


class TruncatedSeries:
    """Base class for sum_{n<=N} c_n Q^n over a coefficient ring.

    Subclasses set ``_zero`` and ``_one`` (the coefficient ring's identities)
    and may override :meth:`_shift_coeff` (multiplication by q**k).
    """

    __slots__ = ("_coeffs",)
    _zero = ZERO
    _one = ONE

    def __init__(self, order: int, coeffs=None):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        out = [self._zero] * (order + 1)
        if coeffs is not None:
            items = coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)
            for n, c in items:
                if n < 0:
                    raise ValueError("negative Q-degree")
                if n > order:
                    if not _coeff_is_zero(c):
                        raise TruncationError(f"degree {n} exceeds truncation order {order}")
                    continue
                out[n] = self._lift(c)
        self._coeffs = tuple(out)

    @classmethod
    def _lift(cls, c):
        return c if isinstance(c, QRatFun) else QRatFun.const(c)

    @classmethod
    def _make(cls, coeffs):
        obj = cls.__new__(cls)
        obj._coeffs = tuple(coeffs)
        return obj

    @classmethod
    def one(cls, order: int):
        return cls._make([cls._one] + [cls._zero] * order)

    @classmethod
    def zero(cls, order: int):
        return cls._make([cls._zero] * (order + 1))

    @classmethod
    def monomial(cls, order: int, n: int, c=None):
        c = cls._one if c is None else c
        return cls(order, {n: c})

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    truncation_order = order

    def __getitem__(self, n: int):
        if 0 <= n < len(self._coeffs):
            return self._coeffs[n]
        if n < 0:
            return self._zero
        raise TruncationError(f"coefficient Q^{n} beyond truncation order {self.order}")

    def coefficients(self) -> tuple:
        return self._coeffs

    def __iter__(self):
        return iter(self._coeffs)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.order != self.order:
            raise TruncationError(f"truncation orders differ: {self.order} vs {other.order}")

    def truncate(self, order: int):
        if order <= self.order:
            return self._make(self._coeffs[: order + 1])
        return self._make(self._coeffs + (self._zero,) * (order - self.order))

    def is_zero(self) -> bool:
        return all(_coeff_is_zero(c) for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return type(other) is type(self) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __add__(self, other):
        self._check(other)
        return self._make(a + b for a, b in zip(self._coeffs, other._coeffs))

    def __sub__(self, other):
        self._check(other)
        return self._make(a - b for a, b in zip(self._coeffs, other._coeffs))

    def __neg__(self):
        return self._make(-a for a in self._coeffs)

    def scale(self, c):
        """Multiply every coefficient by the scalar ``c``."""
        return self._make(a * c for a in self._coeffs)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        N = self.order
        a, b = self._coeffs, other._coeffs
        nz_a = [i for i in range(N + 1) if not _coeff_is_zero(a[i])]
        nz_b = [j for j in range(N + 1) if not _coeff_is_zero(b[j])]
        out = [self._zero] * (N + 1)
        for i in nz_a:
            for j in nz_b:
                if i + j > N:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return self._make(out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            return self.invert() ** (-k)
        out = self.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def mul_q_monomial(self, n: int):
        """Multiply by Q**n, dropping terms beyond the truncation order."""
        N = self.order
        return self._make(([self._zero] * n + list(self._coeffs[: N + 1 - n])) if n <= N else [self._zero] * (N + 1))

    @staticmethod
    def _shift_coeff(c, k: int):
        return c.scale_q(k)

    def e_shift(self, power: int = 1):
        """(E^power f)(Q) = f(q^power Q)."""
        return self._make(self._shift_coeff(c, power * n) for n, c in enumerate(self._coeffs))

    def delta(self):
        """(1 - E) f."""
        return self - self.e_shift()

    def invert(self):
        """Multiplicative inverse; needs an invertible Q^0 coefficient."""
        a = self._coeffs
        if _coeff_is_zero(a[0]):
            raise ZeroDivisionError("series with zero constant term is not a unit")
        b0 = _coeff_inverse(a[0])
        b = [b0]
        for n in range(1, self.order + 1):
            s = self._zero
            for k in range(1, n + 1):
                if not _coeff_is_zero(a[k]):
                    s = s + a[k] * b[n - k]
            b.append(-(b0 * s))
        return self._make(b)

    def exp(self):
        """exp(a) = sum_{m<=N} a^m/m!; needs a zero Q^0 coefficient."""
        if not _coeff_is_zero(self._coeffs[0]):
            raise ValueError("exp needs a series without constant term")
        out = self.one(self.order)
        term = self.one(self.order)
        for m in range(1, self.order + 1):
            term = (term * self).scale(QRatFun.const(1) / m)
            out = out + term
        return out

    def map(self, fn):
        return self._make(fn(c) for c in self._coeffs)

    def __repr__(self):
        terms = [f"({c})*Q^{n}" for n, c in enumerate(self._coeffs) if not _coeff_is_zero(c)]
        return f"{type(self).__name__}(order={self.order}: {' + '.join(terms) or '0'})"


def _coeff_is_zero(c) -> bool:
    if isinstance(c, (int,)):
        return c == 0
    return c.is_zero()


def _coeff_inverse(c):
    return c.inverse()


class QSeries(TruncatedSeries):
    """Truncated power series in Q over Q(q)."""

    __slots__ = ()

    def at(self, value):
        """Evaluate every coefficient at q = value; returns a list of Fractions."""
        return [c(value) for c in self._coeffs]


def series_arith(a: QSeries, b: QSeries, which: str) -> QSeries:
    if which == "add":
        return a + b
    if which == "mul":
        return a * b
    raise ValueError(f"unknown operation {which!r}")


def series_invert(a: QSeries) -> QSeries:
    return a.invert()


def series_exp(a: QSeries) -> QSeries:
    return a.exp()


def e_shift(a: TruncatedSeries) -> TruncatedSeries:
    return a.e_shift()


# log-extended series


class LogSeries:
    """sum_{n<=N, j<=J} c_{n,j} Q^n lam^j with lam = log Q / log q."""

    __slots__ = ("_rows", "lambda_bound")

    def __init__(self, order: int, lambda_bound: int, coeffs=None):
        if order < 0 or lambda_bound < 0:
            raise ValueError("bounds must be nonnegative")
        rows = [[ZERO] * (lambda_bound + 1) for _ in range(order + 1)]
        for (n, j), c in (coeffs or {}).items():
            c = c if isinstance(c, QRatFun) else QRatFun.const(c)
            if n > order or j > lambda_bound:
                if not c.is_zero():
                    raise TruncationError(f"term Q^{n} lam^{j} outside bounds ({order}, {lambda_bound})")
                continue
            rows[n][j] = c
        self._rows = tuple(tuple(r) for r in rows)
        self.lambda_bound = lambda_bound

    @classmethod
    def _make(cls, rows, lambda_bound):
        obj = cls.__new__(cls)
        obj._rows = tuple(tuple(r) for r in rows)
        obj.lambda_bound = lambda_bound
        return obj

    @classmethod
    def from_series(cls, s: QSeries, lambda_bound: int, j: int = 0) -> "LogSeries":
        """The log-series ``s * lam**j``."""
        return cls(s.order, lambda_bound, {(n, j): c for n, c in enumerate(s) if not c.is_zero()})

    @classmethod
    def lam(cls, order: int, lambda_bound: int, power: int = 1) -> "LogSeries":
        return cls(order, lambda_bound, {(0, power): ONE})

    @property
    def order(self) -> int:
        return len(self._rows) - 1

    truncation_order = order

    def __getitem__(self, key):
        n, j = key
        if n > self.order or j > self.lambda_bound:
            raise TruncationError(f"Q^{n} lam^{j} outside bounds")
        return self._rows[n][j]

    def items(self):
        for n, row in enumerate(self._rows):
            for j, c in enumerate(row):
                if not c.is_zero():
                    yield (n, j), c

    def lambda_part(self, j: int) -> QSeries:
        """The QSeries multiplying lam**j."""
        return QSeries._make(row[j] for row in self._rows)

    def is_zero(self) -> bool:
        return all(c.is_zero() for row in self._rows for c in row)

    def _check(self, other):
        if not isinstance(other, LogSeries):
            raise TypeError("expected a LogSeries")
        if other.order != self.order or other.lambda_bound != self.lambda_bound:
            raise TruncationError("LogSeries bounds differ")

    def __eq__(self, other):
        if not isinstance(other, LogSeries):
            return NotImplemented
        return self.lambda_bound == other.lambda_bound and self._rows == other._rows

    def __hash__(self):
        return hash((self._rows, self.lambda_bound))

    def __add__(self, other):
        self._check(other)
        return self._make(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.lambda_bound
        )

    def __sub__(self, other):
        self._check(other)
        return self._make(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)], self.lambda_bound
        )

    def __neg__(self):
        return self._make([[-a for a in r] for r in self._rows], self.lambda_bound)

    def __mul__(self, other):
        """Product with a scalar, a QSeries, or another LogSeries."""
        N, J = self.order, self.lambda_bound
        if isinstance(other, QSeries):
            if other.order != N:
                raise TruncationError("truncation orders differ")
            rows = [[ZERO] * (J + 1) for _ in range(N + 1)]
            for m, c in enumerate(other):
                if c.is_zero():
                    continue
                for n in range(N + 1 - m):
                    for j, a in enumerate(self._rows[n]):
                        if not a.is_zero():
                            rows[n + m][j] = rows[n + m][j] + c * a
            return self._make(rows, J)
        if isinstance(other, LogSeries):
            self._check(other)
            rows = [[ZERO] * (J + 1) for _ in range(N + 1)]
            for (n, j), a in self.items():
                for (m, i), b in other.items():
                    if n + m > N:
                        continue
                    if i + j > J:
                        raise TruncationError("lambda power exceeds lambda_bound")
                    rows[n + m][i + j] = rows[n + m][i + j] + a * b
            return self._make(rows, J)
        return self._make([[a * other for a in r] for r in self._rows], J)

    __rmul__ = __mul__

    def e_shift(self, power: int = 1) -> "LogSeries":
        """E^power: Q^n lam^j -> q^(power n) Q^n (lam + power)^j."""
        J = self.lambda_bound
        rows = []
        for n, row in enumerate(self._rows):
            out = [ZERO] * (J + 1)
            for j, c in enumerate(row):
                if c.is_zero():
                    continue
                c = c.scale_q(power * n)
                for i in range(j + 1):
                    w = comb(j, i) * power ** (j - i)
                    if w:
                        out[i] = out[i] + c * w
            rows.append(out)
        return self._make(rows, J)

    def delta(self) -> "LogSeries":
        return self - self.e_shift()

    def __repr__(self):
        terms = [f"({c})*Q^{n}*lam^{j}" for (n, j), c in self.items()]
        return f"LogSeries(order={self.order}, J={self.lambda_bound}: {' + '.join(terms) or '0'})"


def log_e_shift(a: LogSeries) -> LogSeries:
    return a.e_shift()


def solve_delta(rhs: LogSeries) -> LogSeries:
    """Solve (1 - E) y = rhs, with the Q^0 lam^0 coefficient of y set to 0.

    At Q-degree n >= 1 the equations are triangular from the top lam power
    down; at Q-degree 0, (1 - E) lowers the lam degree by one, so the top
    lam power of rhs must vanish there.
    """
    N, J = rhs.order, rhs.lambda_bound
    rows = [[ZERO] * (J + 1) for _ in range(N + 1)]
    # degree 0: y(lam) - y(lam+1) = r(lam)
    r0 = rhs._rows[0]
    if not r0[J].is_zero():
        raise TruncationError("lambda_bound too small to invert Delta at Q^0")
    y0 = rows[0]
    for j in range(J - 1, -1, -1):
        # coefficient of lam^j:  -sum_{i>j} C(i,j) y_i = r_j
        s = r0[j]
        for i in range(j + 2, J + 1):
            s = s + y0[i] * comb(i, j)
        y0[j + 1] = -s / (j + 1)
    for n in range(1, N + 1):
        r = rhs._rows[n]
        y = rows[n]
        qn = QRatFun.q(n)
        inv = ONE / (ONE - qn)
        for j in range(J, -1, -1):
            # y_j (1 - q^n) - q^n sum_{i>j} C(i,j) y_i = r_j
            s = r[j]
            for i in range(j + 1, J + 1):
                if not y[i].is_zero():
                    s = s + (y[i] * comb(i, j)).scale_q(n)
            y[j] = s * inv
    return LogSeries._make(rows, J)


# q-difference operators


class QDiffOp:
    """Linear q-difference operator sum_s c_s(Q) E^s, coefficients on the left.

    ``E Q = q Q E``; :func:`op_compose` normal-orders products accordingly.
    """

    __slots__ = ("terms", "_order")

    def __init__(self, order: int, terms=None):
        self._order = order
        clean = {}
        for s, c in (terms or {}).items():
            if s < 0:
                raise ValueError("negative shift exponent")
            if not isinstance(c, QSeries):
                c = QSeries(order, {0: c})
            if c.order != order:
                raise TruncationError("operator coefficients must share one truncation order")
            if not c.is_zero():
                clean[s] = c
        self.terms = dict(sorted(clean.items()))

    @classmethod
    def identity(cls, order: int) -> "QDiffOp":
        return cls(order, {0: ONE})

    @classmethod
    def shift(cls, order: int, s: int = 1) -> "QDiffOp":
        return cls(order, {s: ONE})

    @classmethod
    def multiplication(cls, c: QSeries) -> "QDiffOp":
        return cls(c.order, {0: c})

    @property
    def order(self) -> int:
        return self._order

    @property
    def shift_order(self) -> int:
        return max(self.terms) if self.terms else -1

    def support(self) -> set:
        return set(self.terms)

    def coefficient(self, s: int) -> QSeries:
        return self.terms.get(s, QSeries.zero(self._order))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, QDiffOp):
            return NotImplemented
        return self._order == other._order and self.terms == other.terms

    def __hash__(self):
        return hash((self._order, tuple(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return QDiffOp(self._order, out)

    def __neg__(self):
        return QDiffOp(self._order, {s: -c for s, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def _check(self, other):
        if not isinstance(other, QDiffOp):
            raise TypeError("expected a QDiffOp")
        if other._order != self._order:
            raise TruncationError("operator truncation orders differ")

    def __mul__(self, other):
        if isinstance(other, QDiffOp):
            return op_compose(self, other)
        return QDiffOp(self._order, {s: c.scale(other) for s, c in self.terms.items()})

    def __rmul__(self, other):
        return QDiffOp(self._order, {s: c.scale(other) for s, c in self.terms.items()})

    def __pow__(self, k: int):
        out = QDiffOp.identity(self._order)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, a):
        return op_apply(self, a)

    def __repr__(self):
        return f"QDiffOp(order={self._order}, shifts={sorted(self.terms)})"


def op_apply(P: QDiffOp, a):
    """Apply P to a QSeries or LogSeries (E^s first, then the coefficient)."""
    if isinstance(a, LogSeries):
        if a.order != P.order:
            raise TruncationError("truncation orders differ")
        out = LogSeries(a.order, a.lambda_bound)
        for s, c in P.terms.items():
            out = out + a.e_shift(s) * c
        return out
    if not isinstance(a, QSeries):
        raise TypeError("op_apply expects a QSeries or LogSeries")
    if a.order != P.order:
        raise TruncationError("truncation orders differ")
    N = a.order
    out = [ZERO] * (N + 1)
    # group by the Q-degree e of the coefficients: the scalar multiplier of
    # a_n Q^n is sum_s c_{s,e} q^(s n)
    for e in range(N + 1):
        parts = [(s, c[e]) for s, c in P.terms.items() if not c[e].is_zero()]
        if not parts:
            continue
        for n in range(N + 1 - e):
            if a[n].is_zero():
                continue
            mult = ZERO
            for s, ce in parts:
                mult = mult + ce.scale_q(s * n)
            if not mult.is_zero():
                out[n + e] = out[n + e] + mult * a[n]
    return QSeries._make(out)


def op_compose(P: QDiffOp, R: QDiffOp) -> QDiffOp:
    """P o R in normal order, using E^s c(Q) = c(q^s Q) E^s."""
    P._check(R)
    out = {}
    for s, c in P.terms.items():
        for t, d in R.terms.items():
            term = c * d.e_shift(s)
            out[s + t] = out[s + t] + term if (s + t) in out else term
    return QDiffOp(P.order, out)


def op_derivative(P: QDiffOp, n: int) -> QDiffOp:
    """(E d/dE)^n P: the coefficient of E^k is multiplied by k**n."""
    if n < 0:
        raise ValueError("derivative order must be nonnegative")
    return QDiffOp(P.order, {k: c.scale(QRatFun.const(k**n)) for k, c in P.terms.items() if k**n})


def op_left_divmod(P: QDiffOp, D: QDiffOp):
    """Return (R, S) with P = D o R + S and shift_order(S) < shift_order(D).

    The leading coefficient of D must be a nonzero constant (Q-degree 0 only).
    """
    P._check(D)
    t = D.shift_order
    if t < 0:
        raise ZeroDivisionError("division by the zero operator")
    lead = D.terms[t]
    if any(not lead[n].is_zero() for n in range(1, lead.order + 1)):
        raise ValueError("leading coefficient of the divisor must be constant in Q")
    lead_inv = lead[0].inverse()
    quo = {}
    rem = P
    while rem.shift_order >= t:
        s = rem.shift_order
        c = rem.terms[s].scale(lead_inv).e_shift(-t)
        quo[s - t] = c
        rem = rem - op_compose(D, QDiffOp(P.order, {s - t: c}))
    return QDiffOp(P.order, quo), rem
