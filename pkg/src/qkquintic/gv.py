"""Gopakumar-Vafa data of the quintic and everything built linearly from it.

Kernels are closed-form rational functions f(d, r, q); the bracket of a
kernel is

    [f] = sum_{d, r >= 1} f(d, r, q^r) GV_d Q^(d r).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from pathlib import Path

from .kring import DIM, KElem, KSeries, kseries_from_components, pairing
from .scalars import ONE, ONE_MINUS_Q, ZERO, QRatFun, proj_red
from .series import QSeries

# genus-zero GV invariants of the quintic, d = 1..6
KNOWN_GV = (
    2875,
    609250,
    317206375,
    242467530000,
    229305888887625,
    248249742118022000,
)


class GVCoverageError(ValueError):
    """A computation needs a GV invariant the table does not contain."""


def _divisors(n: int):
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


@dataclass(frozen=True)
class GVTable:
    """Integer GV invariants GV_1..GV_max_degree."""

    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def default(cls) -> "GVTable":
        return cls(KNOWN_GV)

    @classmethod
    def from_mapping(cls, mapping) -> "GVTable":
        degrees = sorted(int(k) for k in mapping)
        if degrees != list(range(1, len(degrees) + 1)):
            raise ValueError("GV degrees must be contiguous from 1")
        return cls(tuple(int(mapping[k] if k in mapping else mapping[str(k)]) for k in degrees))

    @classmethod
    def load(cls, path) -> "GVTable":
        """Read ``{"gv": {"1": "2875", ...}}``."""
        data = json.loads(Path(path).read_text())
        try:
            raw = data["gv"]
        except (KeyError, TypeError):
            raise ValueError("GV file must be an object with a 'gv' mapping") from None
        if not isinstance(raw, dict):
            raise ValueError("'gv' must map degrees to integer strings")
        mapping = {}
        for k, v in raw.items():
            if not isinstance(v, (str, int)) or isinstance(v, bool):
                raise ValueError(f"GV_{k} must be an integer string")
            try:
                mapping[int(k)] = int(v)
            except ValueError:
                raise ValueError(f"malformed GV entry {k!r}: {v!r}") from None
        return cls.from_mapping(mapping)

    def to_record(self) -> dict:
        return {"gv": {str(d): str(v) for d, v in enumerate(self.values, 1)}}

    @property
    def max_degree(self) -> int:
        return len(self.values)

    def __getitem__(self, d: int) -> int:
        if not 1 <= d <= self.max_degree:
            raise GVCoverageError(f"GV_{d} is not in the table (max degree {self.max_degree})")
        return self.values[d - 1]

    def require(self, N: int):
        if N > self.max_degree:
            raise GVCoverageError(f"order {N} needs GV up to degree {N}; table stops at {self.max_degree}")

    def __add__(self, other: "GVTable") -> "GVTable":
        n = max(self.max_degree, other.max_degree)
        a = self.values + (0,) * (n - self.max_degree)
        b = other.values + (0,) * (n - other.max_degree)
        return GVTable(tuple(x + y for x, y in zip(a, b)))

    def scaled(self, c: int) -> "GVTable":
        return GVTable(tuple(c * v for v in self.values))


@dataclass(frozen=True)
class GWTable:
    """Genus-zero GW invariants GW_1..GW_n (rationals)."""

    values: tuple

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n - 1]

    @property
    def max_degree(self) -> int:
        return len(self.values)


def gw_from_gv(gv: GVTable) -> GWTable:
    """GW_n = sum_{d | n} GV_{n/d} / d^3."""
    return GWTable(
        tuple(sum(Fraction(gv[n // d], d**3) for d in _divisors(n)) for n in range(1, gv.max_degree + 1))
    )


def gv_from_gw(gw: GWTable) -> GVTable:
    """GV_n = sum_{d | n} mu(d) GW_{n/d} / d^3; the result must be integral."""
    out = []
    for n in range(1, gw.max_degree + 1):
        v = sum(Fraction(mobius(d), d**3) * gw[n // d] for d in _divisors(n))
        if v.denominator != 1:
            raise ValueError(f"GV_{n} = {v} is not an integer")
        out.append(int(v))
    return GVTable(tuple(out))


def gv_gamma(gv: GVTable, n: int, gamma: int) -> Fraction:
    """GV^(gamma)_n = sum_{d | n} d^gamma GV_d."""
    gv.require(n)
    return sum((Fraction(d) ** gamma * gv[d] for d in _divisors(n)), Fraction(0))


class KernelKind(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    Eker = "e"
    D13 = "d13"
    D14 = "d14"
    D23 = "d23"
    D24 = "d24"


def _q(k=1):
    return QRatFun.q(k)


_U = ONE_MINUS_Q  # 1 - q


@cache
def kernel_eval(kind: KernelKind, d: int, r: int) -> QRatFun:
    """Closed form of the kernel ``kind`` at (d, r), as a function of q."""
    if d < 1 or r < 1:
        raise ValueError("kernels are defined for d, r >= 1")
    q, qd, q1d = _q(), _q(d), _q(d + 1)
    if kind is KernelKind.A:
        v = d * r / _U + d * q / _U**2
    elif kind is KernelKind.B:
        v = (r * d + r * r - d) / _U + QRatFun.const(d) / _U**2 - (q + _q(2)) / _U**3
    elif kind is KernelKind.C:
        v = QRatFun.const(d * d) / _U
    elif kind is KernelKind.Eker:
        v = d * r / _U - d * (d * q + q - d) / _U**2
    elif kind is KernelKind.D13:
        v = d * (-d + q + d * q - q1d + r - q * r - qd * r + q1d * r) / _U**2
    elif kind is KernelKind.D14:
        # one numerator under the leading minus sign
        v = -(
            _q(2) * (1 + 2 * d + d * d - r * r) + q * (1 - 2 * d - 2 * d * d + 2 * r * r)
            + (d * d - r * r) + qd * (-q - _q(2) + r * r - 2 * q * r * r + _q(2) * r * r)
        ) / _U**3
    elif kind is KernelKind.D23:
        v = (d * d) * (ONE - qd) / _U
    elif kind is KernelKind.D24:
        v = -d * (-d + q + d * q - q1d - r + q * r + qd * r - q1d * r) / _U**2
    else:  # pragma: no cover
        raise ValueError(kind)
    return v / 5


def kernel_from_definition(kind: KernelKind, d: int, r: int) -> QRatFun:
    """The same kernels assembled from a, b with (Ef)(d,r,q) = q^d f(d,r,q).

    c and e come from the reduced projection of (1-E)a and Ea + (1-E)b.
    """
    a = kernel_eval(KernelKind.A, d, r)
    b = kernel_eval(KernelKind.B, d, r)
    if kind is KernelKind.A:
        return a
    if kind is KernelKind.B:
        return b
    c = proj_red(a - a.scale_q(d))
    e = proj_red(a.scale_q(d) + b - b.scale_q(d))
    if kind is KernelKind.C:
        return c
    if kind is KernelKind.Eker:
        return e
    E = lambda f: f.scale_q(d)  # noqa: E731
    if kind is KernelKind.D13:
        return a - c - E(a)
    if kind is KernelKind.D14:
        return b - e + E(a) - E(b)
    if kind is KernelKind.D23:
        return c - E(c)
    if kind is KernelKind.D24:
        return e + E(c) - E(e)
    raise ValueError(kind)  # pragma: no cover


def bracket(kind: KernelKind, gv: GVTable, N: int) -> QSeries:
    """[f] truncated at Q^N."""
    gv.require(N)
    coeffs = [ZERO] * (N + 1)
    for d in range(1, N + 1):
        for r in range(1, N // d + 1):
            term = kernel_eval(kind, d, r).subs_power(r) * gv[d]
            coeffs[d * r] = coeffs[d * r] + term
    return QSeries(N, coeffs)


def conjectural_small_j(gv: GVTable, N: int) -> KSeries:
    """(1-q) (1 + [a] x^2 + [b] x^3)."""
    A = bracket(KernelKind.A, gv, N)
    B = bracket(KernelKind.B, gv, N)
    one = QSeries.one(N)
    zero = QSeries.zero(N)
    return kseries_from_components([one, zero, A, B]).scale(ONE_MINUS_Q)


@dataclass(frozen=True)
class QKInvariantSeries:
    """sum_{d>=1} <Phi_alpha / (1 - qL)>_{0,1,d} Q^d."""

    class_index: int
    series: QSeries

    def at(self, value):
        return self.series.at(value)


def extract_qk_invariants(J: KSeries) -> tuple:
    """Solve J = (1-q) Phi_0 + sum_a S_a Phi^a for the correlator series S_a.

    Since (Phi^a, Phi_b) = delta_ab, S_a = (J - (1-q) Phi_0, Phi_a).
    """
    N = J.order
    rest = J - KSeries(N, {0: KElem.scalar(ONE_MINUS_Q)})
    out = []
    for a in range(DIM):
        basis = KElem.basis(a)
        out.append(QKInvariantSeries(a, QSeries(N, [pairing(c, basis) for c in rest])))
    return tuple(out)


def jm_p_series(gv: GVTable, N: int):
    """p_{1,1}|_{t=0}/(1-q) and p_2|_{t=0}/(1-q) as divisor sums over Q^D."""
    gv.require(N)
    p11 = [ZERO] * (N + 1)
    p2 = [ZERO] * (N + 1)
    for D in range(1, N + 1):
        for r in _divisors(D):
            g = gv[D // r]
            Qr = _q(r)
            u = ONE - Qr
            p11[D] = p11[D] + (D * u + Qr * (D // r)) / u**2 * g
            p2[D] = p2[D] + ((r * r) * u**2 - Qr * (ONE + Qr)) / u**3 * g
    return QSeries(N, p11), QSeries(N, p2)
