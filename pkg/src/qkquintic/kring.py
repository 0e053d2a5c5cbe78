"""The K-theory ring K(X) = Q[x]/(x^4) of the quintic, tensored with Q(q).

Elements are stored by their coordinates in the basis Phi_a = x^a.  The ring
``Q[x]/(x^(N+1))`` of projective space needed by the warm-up computation uses
the same class with a different dimension.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb

from .scalars import ONE, ZERO, QRatFun
from .series import TruncatedSeries

DIM = 4

PAIRING = (
    (0, 5, -5, 5),
    (5, -5, 5, 0),
    (-5, 5, 0, 0),
    (5, 0, 0, 0),
)


class KElem:
    """sum_a coords[a] x^a in Q(q)[x]/(x^dim)."""

    __slots__ = ("coords",)

    def __init__(self, coords, dim: int = DIM):
        coords = [c if isinstance(c, QRatFun) else QRatFun.const(c) for c in coords]
        if len(coords) > dim:
            if any(not c.is_zero() for c in coords[dim:]):
                raise ValueError("coordinates beyond the ring dimension")
            coords = coords[:dim]
        self.coords = tuple(coords) + (ZERO,) * (dim - len(coords))

    @classmethod
    def _make(cls, coords):
        obj = cls.__new__(cls)
        obj.coords = tuple(coords)
        return obj

    @classmethod
    def zero(cls, dim: int = DIM) -> "KElem":
        return cls._make((ZERO,) * dim)

    @classmethod
    def one(cls, dim: int = DIM) -> "KElem":
        return cls._make((ONE,) + (ZERO,) * (dim - 1))

    @classmethod
    def basis(cls, a: int, dim: int = DIM) -> "KElem":
        return cls._make(tuple(ONE if i == a else ZERO for i in range(dim)))

    @classmethod
    def scalar(cls, c, dim: int = DIM) -> "KElem":
        c = c if isinstance(c, QRatFun) else QRatFun.const(c)
        return cls._make((c,) + (ZERO,) * (dim - 1))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, a: int) -> QRatFun:
        return self.coords[a]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, KElem):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other):
        if not isinstance(other, KElem):
            other = KElem.scalar(other, self.dim)
        return KElem._make(a + b for a, b in zip(self.coords, other.coords))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, KElem):
            other = KElem.scalar(other, self.dim)
        return KElem._make(a - b for a, b in zip(self.coords, other.coords))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return KElem._make(-a for a in self.coords)

    def __mul__(self, other):
        if isinstance(other, KElem):
            return k_mul(self, other)
        return KElem._make(a * other for a in self.coords)

    __rmul__ = __mul__

    def mul_int(self, cs) -> "KElem":
        """Product with sum_i cs[i] x^i for integer cs (no gcds needed)."""
        n = self.dim
        out = []
        for k in range(n):
            s = ZERO
            for i in range(min(k, len(cs) - 1) + 1):
                if cs[i] and not self.coords[k - i].is_zero():
                    s = s + self.coords[k - i] * cs[i]
            out.append(s)
        return KElem._make(out)

    def scale_q(self, k: int) -> "KElem":
        return KElem._make(c.scale_q(k) for c in self.coords)

    def inverse(self) -> "KElem":
        """Inverse of a unit: a0 + n with n nilpotent."""
        a0 = self.coords[0]
        if a0.is_zero():
            raise ZeroDivisionError("element with zero constant term is not a unit")
        inv0 = a0.inverse()
        nil = KElem._make((ZERO,) + tuple(c * inv0 for c in self.coords[1:]))
        out = KElem.one(self.dim)
        term = KElem.one(self.dim)
        for _ in range(1, self.dim):
            term = -(term * nil)
            out = out + term
        return out * inv0

    def __truediv__(self, other):
        if isinstance(other, KElem):
            return self * other.inverse()
        return self * (ONE / other)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = KElem.one(self.dim)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def subs_power(self, r: int) -> "KElem":
        """Apply q -> q**r to every coordinate."""
        return KElem._make(c.subs_power(r) for c in self.coords)

    def to_one_minus_x_basis(self) -> tuple:
        """Coordinates c_i with self = sum_i c_i (1-x)^i."""
        # x = 1 - y, x^a = sum_i C(a,i) (-1)^i y^i
        n = self.dim
        out = [ZERO] * n
        for a, c in enumerate(self.coords):
            if c.is_zero():
                continue
            for i in range(a + 1):
                out[i] = out[i] + c * (comb(a, i) * (-1) ** i)
        return tuple(out)

    @classmethod
    def from_one_minus_x_basis(cls, cs, dim: int = DIM) -> "KElem":
        out = KElem.zero(dim)
        for i, c in enumerate(cs):
            if not c.is_zero():
                out = out + KElem._make(c * v for v in one_minus_x_power(i, dim))
        return out

    def __repr__(self):
        return "KElem(" + ", ".join(str(c) for c in self.coords) + ")"


@cache
def one_minus_x_power(b: int, dim: int = DIM) -> tuple:
    """Integer coordinates of (1-x)^b mod x^dim."""
    return tuple(comb(b, i) * (-1) ** i for i in range(dim))


def k_mul(a: KElem, b: KElem) -> KElem:
    """Polynomial product modulo x^dim."""
    if a.dim != b.dim:
        raise ValueError("K-ring dimensions differ")
    n = a.dim
    out = [ZERO] * n
    for i, ai in enumerate(a.coords):
        if ai.is_zero():
            continue
        for j in range(n - i):
            bj = b.coords[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return KElem._make(out)


def pairing(a: KElem, b: KElem) -> QRatFun:
    """The bilinear form (Phi_a, Phi_b) = chi(Phi_a Phi_b) on K(X)."""
    s = ZERO
    for i in range(DIM):
        if a[i].is_zero():
            continue
        for j in range(DIM):
            if PAIRING[i][j] and not b[j].is_zero():
                s = s + a[i] * b[j] * PAIRING[i][j]
    return s


def dual_basis() -> tuple:
    """Phi^0..Phi^3, dual to Phi_a = x^a under :func:`pairing`."""
    f = Fraction(1, 5)
    rows = ((0, 0, 0, f), (0, 0, f, f), (0, f, f, 0), (f, f, 0, -f))
    return tuple(KElem(r) for r in rows)


@cache
def KSeriesType(dim: int):
    """Truncated series in Q with coefficients in Q(q)[x]/(x^dim)."""

    class _KSeries(TruncatedSeries):
        __slots__ = ()
        _zero = KElem.zero(dim)
        _one = KElem.one(dim)
        ring_dim = dim

        @classmethod
        def _lift(cls, c):
            if isinstance(c, KElem):
                if c.dim != dim:
                    raise ValueError("K-ring dimension mismatch")
                return c
            return KElem.scalar(c, dim)

        def component(self, a: int):
            """The QSeries of x^a coordinates."""
            from .series import QSeries

            return QSeries._make(c[a] for c in self._coeffs)

        def mul_one_minus_x_power(self, b: int):
            cs = one_minus_x_power(b, dim)
            return self._make(c.mul_int(cs) for c in self._coeffs)

        def twisted_shift(self, power: int = 1):
            """((1-x) E)^power."""
            return self.e_shift(power).mul_one_minus_x_power(power)

    _KSeries.__name__ = "KSeries" if dim == DIM else f"KSeries{dim}"
    _KSeries.__qualname__ = _KSeries.__name__
    return _KSeries


KSeries = KSeriesType(DIM)


def kseries_from_components(components, dim: int = DIM):
    """Assemble a KSeries from ``dim`` QSeries of x^a coordinates."""
    order = components[0].order
    cls = KSeriesType(dim)
    return cls._make(KElem._make(tuple(comp[n] for comp in components)) for n in range(order + 1))
