import json

import pytest

from qkquintic.cli import RunConfig, main
from qkquintic.flow import solve_epsilon
from qkquintic.gv import GVTable, conjectural_small_j
from qkquintic.qdifference import shifted_matrix
from qkquintic.serialize import (
    kseries_from_record,
    kseries_to_record,
    logseries_from_record,
    logseries_to_record,
    matrix_from_record,
    matrix_to_record,
    qseries_from_record,
    qseries_to_record,
)
from qkquintic.series import LogSeries
from qkquintic.scalars import QRatFun


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_invariants_text(capsys):
    code, out = run(capsys, "invariants", "--order", "2", "--format", "text")
    assert code == 0
    assert "alpha=0 at q=0: 2875, 620750" in out.out


def test_small_j_order_zero(capsys):
    code, out = run(capsys, "small-j", "--order", "0", "--method", "flow")
    rec = json.loads(out.out)
    J = kseries_from_record(rec["J"])
    assert J.order == 0 and J[0][0] == QRatFun.from_poly([1, -1])
    assert all(J[0][a].is_zero() for a in (1, 2, 3))


def test_flow_and_conjecture_agree(capsys):
    _, a = run(capsys, "small-j", "--order", "4", "--method", "flow")
    _, b = run(capsys, "small-j", "--order", "4", "--method", "conjecture")
    assert json.loads(a.out)["J"] == json.loads(b.out)["J"]


def test_verify_all(capsys):
    code, out = run(capsys, "verify", "--suite", "all", "--order", "6", "--format", "text", "--q-order", "8")
    assert code == 0, out.out
    assert "FAIL" not in out.out


def test_verify_reports_mismatch(capsys, tmp_path):
    gv = list(GVTable.default().values)
    gv[1] += 1
    p = tmp_path / "gv.json"
    p.write_text(json.dumps(GVTable(gv).to_record()))
    code, out = run(capsys, "verify", "--suite", "conjecture", "--order", "3", "--gv-file", str(p), "--format", "text")
    assert code == 1
    assert "FAIL conjecture: Q^2 x^2" in out.out


def test_errors(capsys, tmp_path):
    code, out = run(capsys, "cttt", "--order", "7")
    assert code == 2 and "GV" in out.err
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, out = run(capsys, "cttt", "--order", "2", "--gv-file", str(p))
    assert code == 2
    with pytest.raises(SystemExit):
        main(["nonsense"])
    with pytest.raises(ValueError):
        RunConfig(command="cttt", order=-1)


@pytest.mark.parametrize(
    "argv",
    [
        ("epsilon", "--order", "2"),
        ("matrices", "--order", "2"),
        ("invariants", "--order", "3"),
        ("cttt", "--order", "3", "--q-one"),
        ("frobenius", "--q-order", "4"),
        ("verify", "--suite", "kernels"),
    ],
)
def test_json_strings_only(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 0
    rec = json.loads(out.out)
    assert json.loads(json.dumps(rec)) == rec

    def walk(x):
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)
        else:
            assert not isinstance(x, float)

    walk(rec)


def test_cttt_q_one(capsys):
    _, out = run(capsys, "cttt", "--order", "2", "--q-one")
    assert json.loads(out.out)["q_one"] == ["5", "2875", "4876875"]


def test_record_roundtrips(known_gv):
    J = conjectural_small_j(known_gv, 3)
    assert kseries_from_record(json.loads(json.dumps(kseries_to_record(J)))) == J
    assert qseries_from_record(qseries_to_record(J.component(2))) == J.component(2)
    M = shifted_matrix(J)
    assert matrix_from_record(json.loads(json.dumps(matrix_to_record(M)))) == M
    L = LogSeries(2, 3, {(0, 1): -1, (2, 3): QRatFun.q(2)})
    assert logseries_from_record(logseries_to_record(L)) == L


def test_epsilon_record(capsys):
    _, out = run(capsys, "epsilon", "--order", "1")
    rec = json.loads(out.out)["epsilon"]
    eps, _ = solve_epsilon(1)
    assert rec[0]["eps"]["coefficients"][0] == "1724"
    assert len(rec) == 4
