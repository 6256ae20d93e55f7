"""Command line interface: exit codes, report output, cache management.

The fast rank-3 control keeps these end-to-end runs inexpensive; the full
positive run is exercised by the acceptance suite.
"""

import json
import re

import pytest

from confsys.cli import main
from confsys.report import VerificationReport


def _verify_a3(tmp_path, *extra):
    return main(["verify", "--type", "A3", "--expect-no-omega3",
                 "--cache-dir", str(tmp_path / "cache"), *extra])


def test_control_run_passes_and_prints_summary(tmp_path, capsys):
    assert _verify_a3(tmp_path) == 0
    out = capsys.readouterr().out
    assert "algebra A3" in out
    assert "graded dims [1, 4, 5, 4, 1]" in out
    assert "special values: none" in out
    assert "expected outcome: no cubic system" in out
    assert "result: OK" in out
    assert "FAIL" not in out.replace("result: OK", "")
    assert re.search(r"PASS no_special_value", out)


def test_emit_json_round_trips(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert _verify_a3(tmp_path, "--emit-json", str(out_path)) == 0
    rep = VerificationReport.loads(out_path.read_text())
    assert rep.ok
    assert rep.algebra["label"] == "A3"
    assert rep.graded_dims == [1, 4, 5, 4, 1]
    assert rep.special_values.values == []
    assert not rep.expect_system
    assert {c.status for c in rep.checks} == {"pass"}


def test_reports_are_deterministic_modulo_timing(tmp_path):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert _verify_a3(tmp_path, "--emit-json", str(p1)) == 0
    assert _verify_a3(tmp_path, "--emit-json", str(p2)) == 0
    b1, b2 = json.loads(p1.read_text()), json.loads(p2.read_text())
    for body in (b1, b2):
        for c in body["checks"]:
            c["wall_time_s"] = 0.0
    assert b1 == b2


def test_mismatched_expectation_fails(tmp_path, capsys):
    # claiming the control has a cubic system must make the run fail:
    # the system-scope checks are skipped and skipped counts as not ok
    code = main(["verify", "--type", "A3",
                 "--cache-dir", str(tmp_path / "cache")])
    assert code == 1
    out = capsys.readouterr().out
    assert "result: FAIL" in out
    assert "SKIP" in out


def test_unknown_type_is_a_usage_error(tmp_path, capsys):
    code = main(["verify", "--type", "Z9",
                 "--cache-dir", str(tmp_path / "cache")])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_cache_build_and_clear(tmp_path, capsys):
    cdir = str(tmp_path / "cache")
    assert main(["cache", "build", "--type", "A3", "--cache-dir", cdir]) == 0
    out = capsys.readouterr().out
    assert "built" in out and "algebra-A3-v1.json" in out
    assert main(["cache", "clear", "--cache-dir", cdir]) == 0
    out = capsys.readouterr().out
    assert "cleared 1 cache entries" in out
    assert main(["cache", "clear", "--cache-dir", cdir]) == 0
    assert "cleared 0 cache entries" in capsys.readouterr().out


def test_cache_build_requires_type(capsys):
    assert main(["cache", "build"]) == 2
    assert "requires --type" in capsys.readouterr().err
