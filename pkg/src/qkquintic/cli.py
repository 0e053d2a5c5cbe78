"""Command line interface: ``qkquintic <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .flow import solve_epsilon
from .frobenius import frobenius_data, frobenius_residual, l5_factor, vanishes_below
from .gv import GVCoverageError, GVTable, conjectural_small_j, extract_qk_invariants
from .qdifference import a_matrix_closed, birkhoff, d_matrix_closed, shifted_matrix, yukawa
from .scalars import limit_q1
from .serialize import (
    fraction_to_str,
    kseries_to_record,
    kseries_to_text,
    laurent_to_record,
    matrix_to_record,
    matrix_to_text,
    qseries_to_record,
    qseries_to_text,
)
from .verify import SUITES, run_suite

log = logging.getLogger("qkquintic")

FLOW_WARN_ORDER = 6


@dataclass
class RunConfig:
    command: str
    order: int = 2
    gv_file: Path | None = None
    format: str = "json"
    method: str = "flow"
    suite: str = "all"
    q_one: bool = False
    q_order: int = 20

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("--order must be nonnegative")
        if self.q_order < 0:
            raise ValueError("--q-order must be nonnegative")

    def gv(self) -> GVTable:
        return GVTable.load(self.gv_file) if self.gv_file else GVTable.default()


def _small_j(cfg: RunConfig):
    if cfg.method == "flow":
        _warn_flow(cfg.order)
        return solve_epsilon(cfg.order)[1]
    return conjectural_small_j(cfg.gv(), cfg.order)


def _warn_flow(N: int):
    if N > FLOW_WARN_ORDER:
        log.warning("flow beyond Q^%d: runtime grows quickly", FLOW_WARN_ORDER)


def cmd_small_j(cfg):
    J = _small_j(cfg)
    return {"method": cfg.method, "J": kseries_to_record(J)}, kseries_to_text(J, "J")


def cmd_epsilon(cfg):
    _warn_flow(cfg.order)
    eps, _ = solve_epsilon(cfg.order)
    rec = [{"k": k, "l": l, "eps": laurent_to_record(v)} for (k, l), v in eps.items()]
    text = [f"eps[{k},{l}] = {v}" for (k, l), v in eps.items()]
    return {"epsilon": rec}, text


def cmd_matrices(cfg):
    gv = cfg.gv()
    T, U = birkhoff(shifted_matrix(_small_j(cfg)))
    D = d_matrix_closed(gv, cfg.order)
    A = a_matrix_closed(gv, cfg.order)
    mats = {"T": T, "U": U, "D": D, "A": A}
    text = []
    for name, M in mats.items():
        text.extend(matrix_to_text(M, name))
    return {name: matrix_to_record(M) for name, M in mats.items()}, text


def cmd_invariants(cfg):
    S = extract_qk_invariants(_small_j(cfg))
    rec, text = [], []
    for s in S:
        at0 = [fraction_to_str(s.series[n](0)) for n in range(1, s.series.order + 1)]
        rec.append({"alpha": s.class_index, "series": qseries_to_record(s.series), "at_q0": at0})
        text.append(f"alpha={s.class_index} at q=0: " + ", ".join(at0))
        text.extend(qseries_to_text(s.series, f"alpha={s.class_index}"))
    return {"invariants": rec}, text


def cmd_cttt(cfg):
    Y = yukawa(cfg.gv(), cfg.order)
    rec = {"quantum": qseries_to_record(Y.quantum), "classical": qseries_to_record(Y.classical)}
    text = qseries_to_text(Y.quantum, "cttt(Q,q)") + qseries_to_text(Y.classical, "cttt(Q)")
    if cfg.q_one:
        lim = [fraction_to_str(limit_q1(c)) for c in Y.quantum]
        rec["q_one"] = lim
        text.append("cttt(Q,1): " + ", ".join(lim))
    return rec, text


def cmd_frobenius(cfg):
    M = cfg.q_order
    data = frobenius_data(M)
    res = [vanishes_below(frobenius_residual(n, data), M) for n in range(4)]
    _, rem = l5_factor(M)
    rec = {
        "order": M,
        "J": [qseries_to_record(j) for j in data.J],
        "residual_vanishes": res,
        "divisible_by_one_minus_E": rem.is_zero(),
    }
    text = [f"residual {n} vanishes through Q^{M - 1}: {ok}" for n, ok in enumerate(res)]
    text.append(f"L5 divisible by (1 - E): {rem.is_zero()}")
    for k, j in enumerate(data.J):
        text.extend(qseries_to_text(j, f"J{k}"))
    return rec, text


def cmd_verify(cfg):
    results = run_suite(cfg.suite, cfg.gv(), cfg.order, cfg.q_order)
    rec = {"suite": cfg.suite, "results": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    return rec, [r.line() for r in results], all(r.passed for r in results)


COMMANDS = {
    "small-j": cmd_small_j,
    "epsilon": cmd_epsilon,
    "matrices": cmd_matrices,
    "invariants": cmd_invariants,
    "cttt": cmd_cttt,
    "frobenius": cmd_frobenius,
    "verify": cmd_verify,
}


def run(cfg: RunConfig, out=None) -> int:
    """Execute one command and write its report; return the exit status."""
    out = out or sys.stdout
    if cfg.command not in COMMANDS:
        raise ValueError(f"unknown command {cfg.command!r}")
    result = COMMANDS[cfg.command](cfg)
    ok = True
    if len(result) == 3:
        rec, text, ok = result
    else:
        rec, text = result
    if cfg.format == "json":
        json.dump(rec, out, indent=1)
        out.write("\n")
    else:
        out.write("\n".join(text) + "\n")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gv-file", type=Path, help="GV table as JSON {\"gv\": {\"1\": \"2875\", ...}}")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="qkquintic", description="Quantum K-theory of the quintic, exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, order=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if order:
            sp.add_argument("--order", type=int, default=2, help="Q-adic truncation order")
        return sp

    sp = add("small-j", "small J-function")
    sp.add_argument("--method", choices=("flow", "conjecture"), default="flow")
    add("epsilon", "flow coefficients eps_{k,l}")
    sp = add("matrices", "T, U, D and A matrices")
    sp.add_argument("--method", choices=("flow", "conjecture"), default="conjecture")
    sp = add("invariants", "one-point quantum K-invariants")
    sp.add_argument("--method", choices=("flow", "conjecture"), default="flow")
    sp = add("cttt", "q-deformed Yukawa coupling")
    sp.add_argument("--q-one", action="store_true", help="also print the q = 1 limits")
    sp = add("frobenius", "Frobenius data for the 25th order operator", order=False)
    sp.add_argument("--q-order", type=int, default=20)
    sp = add("verify", "run a verification suite")
    sp.add_argument("--suite", choices=SUITES, default="all")
    sp.add_argument("--q-order", type=int, default=20, help="data order for the frobenius checks")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    kw = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    try:
        cfg = RunConfig(**kw)
        return run(cfg)
    except (ValueError, GVCoverageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
