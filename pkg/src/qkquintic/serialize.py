"""JSON records and plain-text rendering for the exact objects.

Rationals are always strings ("2875", "-1/2"), never JSON numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .kring import KElem, KSeriesType
from .scalars import QLaurent, QRatFun, ratfun_from_record, ratfun_to_record, ratfun_to_text
from .series import LogSeries, QSeries


def fraction_to_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def fraction_from_str(s: str) -> Fraction:
    if not isinstance(s, str):
        raise TypeError(f"expected a rational string, got {s!r}")
    return Fraction(s)


def laurent_to_record(p: QLaurent) -> dict:
    return {"lowest_power": p.lowest_power, "coefficients": [fraction_to_str(c) for c in p.coefficients]}


def laurent_from_record(rec: dict) -> QLaurent:
    return QLaurent(int(rec["lowest_power"]), tuple(fraction_from_str(c) for c in rec["coefficients"]))


def qseries_to_record(s: QSeries) -> dict:
    return {"order": s.order, "coefficients": [ratfun_to_record(c) for c in s]}


def qseries_from_record(rec: dict) -> QSeries:
    cs = [ratfun_from_record(c) for c in rec["coefficients"]]
    if len(cs) != rec["order"] + 1:
        raise ValueError("coefficient count does not match the order")
    return QSeries(rec["order"], cs)


def kseries_to_record(s) -> dict:
    return {
        "order": s.order,
        "dim": type(s).ring_dim,
        "coefficients": [[ratfun_to_record(c) for c in e.coords] for e in s],
    }


def kseries_from_record(rec: dict):
    dim = int(rec["dim"])
    cls = KSeriesType(dim)
    cs = [KElem([ratfun_from_record(c) for c in e], dim) for e in rec["coefficients"]]
    return cls(rec["order"], cs)


def matrix_to_record(M) -> dict:
    """Row-major array of QSeries records."""
    return {"order": M.order, "rows": [[qseries_to_record(e) for e in row] for row in M.rows]}


def matrix_from_record(rec: dict):
    from .qdifference import SeriesMatrix

    return SeriesMatrix([[qseries_from_record(e) for e in row] for row in rec["rows"]])


def logseries_to_record(s: LogSeries) -> dict:
    return {
        "order": s.order,
        "lambda_bound": s.lambda_bound,
        "terms": [{"n": n, "j": j, "value": ratfun_to_record(c)} for (n, j), c in s.items()],
    }


def logseries_from_record(rec: dict) -> LogSeries:
    terms = {(t["n"], t["j"]): ratfun_from_record(t["value"]) for t in rec["terms"]}
    return LogSeries(rec["order"], rec["lambda_bound"], terms)


# text


def qseries_to_text(s: QSeries, name: str = "") -> list[str]:
    prefix = f"{name} " if name else ""
    return [f"{prefix}Q^{n}: {ratfun_to_text(c)}" for n, c in enumerate(s) if not c.is_zero()]


def kseries_to_text(s, name: str = "") -> list[str]:
    prefix = f"{name} " if name else ""
    lines = []
    for n, e in enumerate(s):
        for a, c in enumerate(e.coords):
            if not c.is_zero():
                lines.append(f"{prefix}Q^{n} x^{a}: {ratfun_to_text(c)}")
    return lines


def matrix_to_text(M, name: str) -> list[str]:
    lines = []
    for i, row in enumerate(M.rows):
        for j, e in enumerate(row):
            lines.extend(qseries_to_text(e, f"{name}[{i + 1},{j + 1}]"))
    return lines


def ratfun_str(f: QRatFun) -> str:
    return ratfun_to_text(f)
