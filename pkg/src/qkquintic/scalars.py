"""Exact scalars: rationals, (Laurent) polynomials and rational functions in q.

Polynomials are :class:`flint.fmpq_poly` values (exact, arbitrary precision).
:class:`QRatFun` keeps every value in canonical form: the numerator and
denominator are coprime and the denominator is monic.  The zero function is
``0/1``.

The splitting of Q(q) used throughout the package is implemented by
:func:`proj_pol` (Laurent polynomial part) and :func:`proj_red` (reduced part,
i.e. negative degree and regular at q = 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import flint

QPoly = flint.fmpq_poly

_ZERO = QPoly([])
_ONE = QPoly([1])
Q_GEN = QPoly([0, 1])


def to_fraction(c) -> Fraction:
    """Convert an ``fmpq``/``fmpz``/int/Fraction to :class:`fractions.Fraction`."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, flint.fmpq):
        return Fraction(int(c.p), int(c.q))
    if isinstance(c, flint.fmpz):
        return Fraction(int(c))
    if isinstance(c, _RationalABC):
        return Fraction(c.numerator, c.denominator)
    raise TypeError(f"not an exact rational: {c!r}")


def _fmpq(c) -> flint.fmpq:
    c = to_fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def poly(coeffs) -> QPoly:
    """Polynomial from ascending rational coefficients."""
    return QPoly([_fmpq(c) for c in coeffs])


def poly_coeffs(p: QPoly) -> list[Fraction]:
    """Ascending coefficients of ``p`` as Fractions (``[]`` for zero)."""
    if p.is_zero():
        return []
    return [to_fraction(c) for c in p.coeffs()]


def monomial(k: int, c=1) -> QPoly:
    """The polynomial ``c*q**k`` (k >= 0)."""
    if k < 0:
        raise ValueError("monomial exponent must be nonnegative")
    return QPoly([0] * k + [_fmpq(c)])


def _low_power(p: QPoly) -> int:
    """Largest m with q**m dividing p (p != 0)."""
    for i, c in enumerate(p.coeffs()):
        if c != 0:
            return i
    raise ValueError("zero polynomial")


def _inflate(p: QPoly, r: int) -> QPoly:
    if r == 1 or p.degree() <= 0:
        return p
    coeffs = p.coeffs()
    out = [0] * (r * (len(coeffs) - 1) + 1)
    for i, c in enumerate(coeffs):
        out[r * i] = c
    return QPoly(out)


class QRatFun:
    """An exact element of Q(q) in canonical form.

    >>> one_minus_q = QRatFun.from_poly([1, -1])
    >>> (1 / one_minus_q + QRatFun.q() / one_minus_q**2) * one_minus_q**2
    QRatFun(1)
    """

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num=0, den=1, *, _canonical: bool = False):
        if not isinstance(num, QPoly):
            num = QPoly([_fmpq(num)]) if not isinstance(num, (list, tuple)) else poly(num)
        if not isinstance(den, QPoly):
            den = QPoly([_fmpq(den)]) if not isinstance(den, (list, tuple)) else poly(den)
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                num, den = _ZERO, _ONE
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
                lc = den.leading_coefficient()
                if lc != 1:
                    num = num / lc
                    den = den / lc
        self._num = num
        self._den = den
        self._hash = None

    # construction helpers
    @classmethod
    def from_poly(cls, coeffs) -> "QRatFun":
        return cls(poly(coeffs) if not isinstance(coeffs, QPoly) else coeffs, _ONE, _canonical=True)

    @classmethod
    def q(cls, k: int = 1) -> "QRatFun":
        """The monomial q**k (k may be negative)."""
        if k >= 0:
            return cls(monomial(k), _ONE, _canonical=True)
        return cls(_ONE, monomial(-k), _canonical=True)

    @classmethod
    def const(cls, c) -> "QRatFun":
        return cls(QPoly([_fmpq(c)]), _ONE, _canonical=True) if c != 0 else ZERO

    @property
    def num(self) -> QPoly:
        return self._num

    @property
    def den(self) -> QPoly:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_polynomial(self) -> bool:
        return self._den.degree() == 0

    def is_constant(self) -> bool:
        return self._den.degree() == 0 and self._num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(self._num[0]) if not self._num.is_zero() else Fraction(0)

    def degree(self) -> int:
        """deg(num) - deg(den); the zero function raises."""
        if self.is_zero():
            raise ValueError("degree of zero")
        return self._num.degree() - self._den.degree()

    # arithmetic
    @staticmethod
    def _coerce(other):
        if isinstance(other, QRatFun):
            return other
        if isinstance(other, QPoly):
            return QRatFun(other, _ONE, _canonical=True)
        if isinstance(other, (int, Fraction, flint.fmpq, flint.fmpz)):
            return QRatFun.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        a, b, c, d = self._num, self._den, other._num, other._den
        if b == d:
            return QRatFun(a + c, b)
        g = b.gcd(d)
        if g.is_one():
            num = a * d + c * b
            return QRatFun(num, b * d, _canonical=True) if not num.is_zero() else ZERO
        bg, dg = b // g, d // g
        num = a * dg + c * bg
        if num.is_zero():
            return ZERO
        h = num.gcd(g)
        if not h.is_one():
            num = num // h
            g = g // h
        # Henrici: gcd(num, bg*dg) == 1 already
        return QRatFun(num, bg * dg * g, _canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return QRatFun(-self._num, self._den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0 or self.is_zero():
                return ZERO
            return QRatFun(self._num * other, self._den, _canonical=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return ZERO
        a, b, c, d = self._num, self._den, other._num, other._den
        if b.degree() == 0 and d.degree() == 0:
            return QRatFun(a * c, _ONE, _canonical=True)
        g1 = a.gcd(d)
        g2 = c.gcd(b)
        if not g1.is_one():
            a, d = a // g1, d // g1
        if not g2.is_one():
            c, b = c // g2, b // g2
        den = b * d
        num = a * c
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num / lc, den / lc
        return QRatFun(num, den, _canonical=True)

    __rmul__ = __mul__

    def inverse(self) -> "QRatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return QRatFun(self._den, self._num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return QRatFun(self._num**k, self._den**k, _canonical=True) if k else ONE

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((tuple(poly_coeffs(self._num)), tuple(poly_coeffs(self._den))))
        return self._hash

    def __call__(self, value):
        """Evaluate at a rational point (raises on a pole)."""
        v = _fmpq(value)
        d = self._den(v)
        if d == 0:
            raise ZeroDivisionError(f"pole at q={value}")
        return to_fraction(self._num(v) / d)

    def subs_power(self, r: int) -> "QRatFun":
        return subst_power(self, r)

    def scale_q(self, k: int) -> "QRatFun":
        """Multiply by q**k."""
        if k == 0 or self.is_zero():
            return self
        if k > 0:
            g = _low_power(self._den)
            t = min(g, k)
            num = self._num.left_shift(k - t)
            den = self._den.right_shift(t) if t else self._den
            return QRatFun(num, den, _canonical=True)
        k = -k
        g = _low_power(self._num)
        t = min(g, k)
        num = self._num.right_shift(t) if t else self._num
        den = self._den.left_shift(k - t)
        return QRatFun(num, den, _canonical=True)

    def __repr__(self):
        if self.is_polynomial():
            return f"QRatFun({_pstr(self._num)})"
        return f"QRatFun(({_pstr(self._num)})/({_pstr(self._den)}))"

    def __str__(self):
        if self.is_polynomial():
            return _pstr(self._num)
        return f"({_pstr(self._num)})/({_pstr(self._den)})"


def _pstr(p: QPoly) -> str:
    cs = poly_coeffs(p)
    if not cs:
        return "0"
    terms = []
    for i, c in enumerate(cs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
        if mono and abs(c) == 1:
            body = mono
        elif mono:
            body = f"{abs(c)}*{mono}"
        else:
            body = str(abs(c))
        terms.append(("-" if c < 0 else "+", body))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


ZERO = QRatFun(_ZERO, _ONE, _canonical=True)
ONE = QRatFun(_ONE, _ONE, _canonical=True)
ONE_MINUS_Q = QRatFun(QPoly([1, -1]), _ONE, _canonical=True)


def ratfun_arith(lhs: QRatFun, rhs: QRatFun, which: str) -> QRatFun:
    """Field operation ``which`` in {'add', 'sub', 'mul', 'div'}."""
    if which == "add":
        return lhs + rhs
    if which == "sub":
        return lhs - rhs
    if which == "mul":
        return lhs * rhs
    if which == "div":
        if rhs.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return lhs / rhs
    raise ValueError(f"unknown operation {which!r}")


@dataclass(frozen=True)
class QLaurent:
    """Laurent polynomial ``q**lowest_power * (c0 + c1 q + ...)``.

    Normalized so that the first and last coefficients are nonzero; the zero
    Laurent polynomial has ``coefficients == ()`` and ``lowest_power == 0``.
    """

    lowest_power: int
    coefficients: tuple

    @classmethod
    def from_poly(cls, p: QPoly, shift: int = 0) -> "QLaurent":
        cs = poly_coeffs(p)
        if not cs:
            return cls(0, ())
        lo = next(i for i, c in enumerate(cs) if c != 0)
        return cls(lo + shift, tuple(cs[lo:]))

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_polynomial(self) -> bool:
        """True if no negative powers occur."""
        return self.is_zero() or self.lowest_power >= 0

    @property
    def highest_power(self) -> int:
        return self.lowest_power + len(self.coefficients) - 1

    def to_ratfun(self) -> QRatFun:
        if self.is_zero():
            return ZERO
        p = poly(self.coefficients)
        if self.lowest_power >= 0:
            return QRatFun(p.left_shift(self.lowest_power), _ONE, _canonical=True)
        return QRatFun(p, monomial(-self.lowest_power))

    def to_poly(self) -> QPoly:
        if not self.is_polynomial():
            raise ValueError("Laurent polynomial has negative powers")
        return self.to_ratfun().num

    def coefficient(self, k: int) -> Fraction:
        i = k - self.lowest_power
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __str__(self):
        return str(self.to_ratfun())


def _split(f: QRatFun):
    """Return (laurent_part, reduced_part) of f."""
    if f.is_zero():
        return QLaurent(0, ()), ZERO
    num, den = f.num, f.den
    m = _low_power(den)
    b = den.right_shift(m) if m else den
    P, R = divmod(num, den)
    if R.is_zero():
        return QLaurent.from_poly(P), ZERO
    if m == 0:
        return QLaurent.from_poly(P), QRatFun(R, den)
    if b.degree() == 0:
        # den = c*q**m: everything is Laurent
        return QLaurent.from_poly(P.left_shift(m) + R / b[0], -m), ZERO
    qm = monomial(m)
    g, s, t = qm.xgcd(b)  # s*q**m + t*b = g (a unit)
    s, t = s / g[0], t / g[0]
    v = (R * s) % b
    u = (R * t) % qm
    lau = QLaurent.from_poly(P.left_shift(m) + u, -m)
    red = QRatFun(v, b) if not v.is_zero() else ZERO
    return lau, red


def proj_pol(f: QRatFun) -> QLaurent:
    """The Laurent-polynomial part L of f, so that f - L is reduced."""
    return _split(f)[0]


def proj_red(f: QRatFun) -> QRatFun:
    """The reduced part of f: negative degree and regular at q = 0."""
    return _split(f)[1]


def is_reduced(f: QRatFun) -> bool:
    if f.is_zero():
        return True
    return f.degree() < 0 and f.den[0] != 0


def subst_power(f: QRatFun, r: int) -> QRatFun:
    """Adams substitution q -> q**r."""
    if r < 1:
        raise ValueError("subst_power needs r >= 1")
    if r == 1 or f.is_zero():
        return f
    num, den = _inflate(f.num, r), _inflate(f.den, r)
    # coprimality and monicity survive q -> q**r
    return QRatFun(num, den, _canonical=True)


def limit_q1(f: QRatFun, k: int = 0) -> Fraction:
    """Value of (1-q)**k * f at q = 1.

    All (1-q) factors of the denominator are cancelled first; a pole of order
    larger than k raises :class:`ValueError`.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if f.is_zero():
        return Fraction(0)
    one = flint.fmpq(1)
    lin = QPoly([-1, 1])
    num, den = f.num, f.den
    zn = 0
    while num(one) == 0:
        num = num // lin
        zn += 1
    zd = 0
    while den(one) == 0:
        den = den // lin
        zd += 1
    order = k + zn - zd
    if order < 0:
        raise ValueError(f"(1-q)^{k} * f still has a pole of order {-order} at q=1")
    if order > 0:
        return Fraction(0)
    # (q-1)**zn/(q-1)**zd * (1-q)**k = (-1)**(zn-zd) ... with zn-zd = -k
    sign = -1 if (zn - zd) % 2 else 1
    return sign * to_fraction(num(one) / den(one))


def pochhammer_scalar(z: QRatFun, m: int) -> QRatFun:
    """(z; q)_m = prod_{j<m} (1 - q**j z) for a scalar z."""
    out = ONE
    for j in range(m):
        out = out * (ONE - z.scale_q(j))
    return out


def q_pochhammer(m: int) -> QPoly:
    """(q; q)_m as a polynomial."""
    out = _ONE
    for j in range(1, m + 1):
        out = out * QPoly([1] + [0] * (j - 1) + [-1])
    return out


# serialization


def _frac_str(c: Fraction) -> str:
    c = to_fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _parse_frac(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"expected a rational string, got {s!r}")
    return Fraction(s)


def ratfun_to_record(f: QRatFun) -> dict:
    return {
        "num": [_frac_str(c) for c in poly_coeffs(f.num)],
        "den": [_frac_str(c) for c in poly_coeffs(f.den)],
    }


def ratfun_from_record(rec: dict) -> QRatFun:
    num = poly([_parse_frac(s) for s in rec["num"]])
    den = poly([_parse_frac(s) for s in rec["den"]])
    return QRatFun(num, den)


def ratfun_to_text(f: QRatFun) -> str:
    """Human-readable form; pure powers of (1-q) in the denominator are
    expanded as ``P(q) + sum c_k/(1-q)^k``."""
    if f.is_polynomial():
        return str(f)
    den = f.den
    one = flint.fmpq(1)
    lin = QPoly([-1, 1])
    m = 0
    rest = den
    while rest(one) == 0:
        rest = rest // lin
        m += 1
    if rest.degree() != 0:
        return str(f)
    # f = num / (c (q-1)^m) ; expand num around q = 1
    c = rest[0]
    num = f.num / c
    parts = []
    poly_part = _ZERO
    taylor = []
    t = num
    u = QPoly([1, -1])  # 1 - q
    # num = sum b_i (1-q)^i
    for _ in range(num.degree() + 1):
        b = t(one)
        taylor.append(b)
        t = (t - b) // u
    sign_den = -1 if m % 2 else 1  # (q-1)^m = (-1)^m (1-q)^m
    for i, b in enumerate(taylor):
        if b == 0:
            continue
        b = b * sign_den
        if i >= m:
            poly_part = poly_part + QPoly([b]) * u ** (i - m)
        else:
            parts.append((m - i, to_fraction(b)))
    out = []
    if not poly_part.is_zero():
        out.append(_pstr(poly_part))
    for k, b in sorted(parts):
        den_s = "(1 - q)" if k == 1 else f"(1 - q)^{k}"
        out.append(f"{b}/{den_s}")
    return " + ".join(out).replace("+ -", "- ") if out else "0"
