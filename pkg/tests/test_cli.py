import csv
import io
import json

import pytest

from ghostseries.cli import run
from ghostseries.ghost import DeltaProfile
from ghostseries.newton import NewtonPolygon, SlopeMultiset
from ghostseries.verify import VerificationReport

BASE = ["--p", "11", "--a", "2", "--s", "0"]


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_slopes_json(capsys):
    code, out, _ = call(capsys, "slopes", *BASE, "--k-bullet", "0", "--bound", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["payload"]["entries"] == [{"slope": "0/1", "mult": 1}, {"slope": "3/1", "mult": 1}]
    assert doc["payload"]["certified"] is True
    assert SlopeMultiset.from_dict(doc["payload"]).entries == ((0, 1), (3, 1))


def test_params_echo(capsys):
    code, out, _ = call(capsys, "params", "--p", "11", "--a", "2", "--s", "9")
    assert code == 0
    assert json.loads(out)["payload"]["derived"] == {"delta": 1, "t1": 3, "t2": 11, "k_eps": 2}


def test_lemmas_exit_zero(capsys):
    code, out, _ = call(capsys, "lemmas", *BASE, "--k-bullet-max", "60")
    assert code == 0
    rep = VerificationReport.from_dict(json.loads(out)["payload"])
    assert rep.ok


@pytest.mark.parametrize("fmt,sep", [("csv", ","), ("tsv", "\t")])
def test_tables(capsys, fmt, sep):
    code, out, _ = call(capsys, "dims", *BASE, "--k-bullet-max", "16", "--format", fmt)
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out), delimiter=sep))
    assert [int(r["d_ur"]) for r in rows if r["k_bullet"] in ("0", "4", "12", "16")] == [1, 2, 3, 4]
    code, out, _ = call(capsys, "ghost", *BASE, "--k-bullet", "0", "--terms", "4", "--format", fmt)
    assert [r["valuation"] for r in csv.DictReader(io.StringIO(out), delimiter=sep)] == ["0", "0", "3", "13", "26"]


def test_ghost_marks_infinite(capsys):
    code, out, _ = call(capsys, "ghost", *BASE, "--k-bullet", "1", "--terms", "3")
    assert [r["valuation"] for r in json.loads(out)["payload"]["rows"]] == [0, 0, "inf", 12]


def test_np_and_delta_roundtrip(capsys):
    _, out, _ = call(capsys, "np", *BASE, "--k-bullet", "14642", "--terms", "3")
    assert NewtonPolygon.from_dict(json.loads(out)["payload"]).vertices == ((0, 0), (1, 0), (3, 12))
    _, out, _ = call(capsys, "delta", *BASE, "--k-bullet", "1")
    prof = DeltaProfile.from_dict(json.loads(out)["payload"])
    assert [prof.raw[e] for e in (-1, 0, 1)] == [6, 2, 6]


def test_ns_flags_maximal(capsys):
    _, out, _ = call(capsys, "ns", *BASE, "--k-bullet", "14642", "--k-bullet-max", "100")
    ranges = json.loads(out)["payload"]["ranges"]
    assert {"lo": 1, "hi": 3, "k_bullet": "1", "L": 1, "maximal": True} in ranges


def test_verify_command(capsys):
    code, out, _ = call(capsys, "verify", *BASE, "--m", "4", "--k1", "14", "--pairs", "2", "--k0", "14")
    assert code == 0
    assert [c["status"] for c in json.loads(out)["payload"]["checks"]] == ["pass", "pass"]


def test_exit_codes(capsys):
    assert call(capsys, "params", "--p", "12", "--a", "2", "--s", "0")[0] == 2
    code, _, err = call(capsys, "params", "--p", "11", "--a", "7", "--s", "0")
    assert code == 2 and "a out of range" in err
    assert call(capsys, "bogus")[0] == 2
    assert call(capsys, "slopes", *BASE, "--k-bullet", "0")[0] == 2
    code, _, err = call(capsys, "slopes", *BASE, "--k-bullet", "0", "--bound", "40", "--n-max", "8")
    assert code == 3 and "certification" in err
    assert call(capsys, "verify", *BASE, "--m", "3", "--k1", "14")[0] == 2
    assert call(capsys, "lemmas", *BASE, "--checks", "nope")[0] == 2


def test_check_failure_exit_one(capsys, monkeypatch):
    from ghostseries import cli
    from ghostseries.verify import CheckResult

    monkeypatch.setattr(cli, "check_local_constancy", lambda *a: CheckResult("local_constancy", "fail", 1, 0, [{"k1": 14}]))
    code, out, _ = call(capsys, "verify", *BASE, "--k1", "14")
    assert code == 1
    assert json.loads(out)["payload"]["checks"][0]["counterexamples"] == [{"k1": 14}]


def test_relaxed_prime(capsys):
    assert call(capsys, "params", "--p", "7", "--a", "2", "--s", "0")[0] == 2
    code, out, err = call(capsys, "params", "--p", "7", "--a", "2", "--s", "0", "--no-strict")
    assert code == 0 and json.loads(out)["payload"]["outside_theorem_range"] and "outside" in err


def test_determinism_and_timing(capsys):
    args = ["slopes", *BASE, "--k-bullet", "14642", "--bound", "13/2"]
    first, second = call(capsys, *args)[1], call(capsys, *args)[1]
    assert first == second
    timed = json.loads(call(capsys, *args, "--timing")[1])
    assert "elapsed_seconds" in timed["metadata"]
    assert timed["payload"] == json.loads(first)["payload"]


def test_big_integers_are_strings(capsys):
    _, out, _ = call(capsys, "ghost", *BASE, "--k-bullet", str(10**30), "--terms", "2")
    assert json.loads(out)["payload"]["k_bullet"] == str(10**30)
