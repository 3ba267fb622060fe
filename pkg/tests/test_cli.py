from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import pytest

from disceq.cli import run
from disceq.instances import load_schema, parse_instance
from disceq.errors import ParseError
from disceq.report import strip_timestamp, validate_report

ROOT = Path(__file__).resolve().parent.parent
INST = ROOT / "instances"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def report(tmp_path, *argv, name="r.json"):
    path = tmp_path / name
    code, out, err = call(*argv, "--json", path)
    rep = json.loads(path.read_text(encoding="utf-8"))
    validate_report(rep)
    return code, rep, out, err


def test_golden_quadratic(tmp_path):
    code, rep, out, _ = report(tmp_path, "solve-poly-disc", INST / "z_n2_d5.inst")
    assert code == 0
    res = rep["result"]
    assert res["class_count"] == 1
    assert res["representatives"] == ["X^2 + X - 1"]
    assert res["complete"] is True
    assert "X^2 + X - 1" in out


def test_golden_counterexample_ring_exit_2(tmp_path):
    code, rep, _, err = report(tmp_path, "solve-poly-disc", INST / "counterexample_ring.inst")
    assert code == 2
    assert rep["status"] == "condition-failure" and rep["condition"] == "e10.1.2m"
    assert "e10.1.2m" in err and "infinite" in err


def test_golden_gaussian_order(tmp_path):
    code, rep, _, _ = report(tmp_path, "solve-order-disc", INST / "zi_order_dm4.inst")
    assert code == 0
    assert sorted(rep["result"]["representatives"]) == ["-theta", "theta"]


def test_demo_counterexample(tmp_path):
    table = tmp_path / "t.tsv"
    code, rep, out, _ = report(tmp_path, "demo-counterexample", "--n", 2, "--c", 1, "--m", 3,
                               "--table", table)
    assert code == 0
    res = rep["result"]
    assert all(res["disc_ok"]) and res["all_inequivalent"]
    assert res["nth_division"]["finite"] is False
    rows = list(csv.reader(table.open(encoding="utf-8"), delimiter="\t"))
    assert rows[0][0] == "m" and len(rows) == 4


def test_every_instance_runs(tmp_path):
    commands = {"ring": "gb", "gb": "gb", "member": "member", "linsolve": "linsolve",
                "quotient": "quotient-reps", "order-check": "order-check",
                "poly-disc": "solve-poly-disc", "order-disc": "solve-order-disc",
                "counterexample": "demo-counterexample"}
    for f in sorted(INST.glob("*.inst")):
        kind = json.loads(f.read_text(encoding="utf-8"))["kind"]
        if f.stem == "cubic_dm23":
            continue                        # long-running; covered by the acceptance suite
        code, rep, _, _ = report(tmp_path, commands[kind], f, "--seed", 11, name=f.stem + ".json")
        expected = 2 if f.stem == "counterexample_ring" else 0
        assert code == expected, f.name
        if "self_check" in rep:
            assert rep["self_check"]["passed"], f.name


def test_report_determinism(tmp_path):
    _, a, _, _ = report(tmp_path, "quotient-reps", INST / "quotient_z6.inst", name="a.json")
    _, b, _, _ = report(tmp_path, "quotient-reps", INST / "quotient_z6.inst", name="b.json")
    assert strip_timestamp(a) == strip_timestamp(b)
    assert a["result"]["representatives"] == ["0", "1", "2", "3", "4", "5"]
    assert a["result"]["primes"] == [2, 3]


def test_require_complete_exit_3(tmp_path):
    code, rep, _, err = report(tmp_path, "solve-poly-disc", INST / "z_n2_d5.inst",
                               "--strategy", "bounded:1", "--require-complete")
    assert code == 3 and rep["status"] == "incomplete"
    assert rep["result"]["complete"] is False
    assert "not provably complete" in err
    code, _, _ = call("solve-poly-disc", INST / "z_n2_d5.inst", "--strategy", "bounded:1", "-q")
    assert code == 0


def test_trace_and_figures(tmp_path):
    figs = tmp_path / "figs"
    code, rep, out, _ = report(tmp_path, "solve-order-disc", INST / "zi_order_dm4.inst",
                               "--trace", "--figures", figs)
    assert code == 0
    assert len(rep["result"]["trace"]) == len(rep["result"]["candidates"])
    assert "--- trace ---" in out
    assert (figs / "verdicts.png").stat().st_size > 0


def test_brute_force_figures(tmp_path):
    figs = tmp_path / "figs"
    code, rep, _, _ = report(tmp_path, "brute-force", "--n", 2, "--delta", 5, "--box", 50,
                             "--figures", figs)
    assert code == 0
    assert len(rep["result"]["polynomials"]) == 14
    assert rep["result"]["representatives"] == ["X^2 + X - 1"]
    assert (figs / "brute_force.png").exists()


def test_quotient_figure(tmp_path):
    code, _, _ = call("quotient-reps", INST / "quotient_z6.inst", "--figures", tmp_path, "-q")
    assert code == 0 and (tmp_path / "quotient_layers.png").exists()


def test_wrong_kind_and_bad_file(tmp_path):
    code, rep, _, err = report(tmp_path, "solve-order-disc", INST / "z_n2_d5.inst")
    assert code == 1 and rep["status"] == "error"
    bad = tmp_path / "bad.inst"
    bad.write_text('{"schema_version": 2, "kind": "gb"}', encoding="utf-8")
    code, _, err = call("gb", bad)
    assert code == 1 and "schema" in err
    bad.write_text("not json", encoding="utf-8")
    assert call("gb", bad)[0] == 1
    assert call("gb", tmp_path / "missing.inst")[0] == 1


def test_instance_schema_rejects_floats():
    with pytest.raises(ParseError):
        parse_instance({"schema_version": 1, "kind": "poly-disc", "degree": 2, "delta": 5.0,
                        "splitting": {"P": "X^2 - 5"}, "strategy": {"variant": "exhaustive"}})


def test_schemas_ship_with_package():
    assert load_schema("instance.schema.json")["title"]
    assert load_schema("report.schema.json")["properties"]["schema_version"]["const"] == 1
