import io
import json

import pytest

from qwalg.bundled import example_path
from qwalg.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def ex(name):
    return str(example_path(name))


class TestExitCodes:
    def test_classify_iom_example(self):
        code, out, _ = call("classify", ex("iom_not_prew"))
        assert code == 0
        assert "PASS          IOM" in out
        assert "QW (fails QW1) at x=d, y=a" in out

    def test_classify_with_failing_expectation(self):
        assert call("classify", ex("iom_not_prew"), "--expect", "qw")[0] == 1
        assert call("classify", ex("iom_not_prew"), "--expect", "iom")[0] == 0

    def test_effect_on_prew_example(self):
        code, out, _ = call("effect", ex("prew_not_iom"))
        assert code == 1 and "E1 at x=b, y=d" in out

    def test_enumerate_count_only(self):
        assert call("enumerate", "--size", 1, "--count-only")[:2] == (0, "1\n")
        assert call("enumerate", "--size", 4, "--count-only")[1] == "5\n"
        assert call("enumerate", "--size", 4, "--count-only", "--no-iso")[1] == "7\n"

    def test_enumerate_lists_models(self):
        code, out, _ = call("enumerate", "--size", 4, "--class", "wajsberg")
        assert code == 0 and out.count("table -> :") == out.count("# model")

    def test_check_defaults_to_base_axioms(self):
        code, out, _ = call("check", ex("qw_noncommutative"))
        assert code == 0 and "INVOLUTIVE" in out

    def test_check_named_axiom_failing(self):
        code, out, _ = call("check", ex("qw_noncommutative"), "--axiom", "BCK4")
        assert code == 1 and "x=a, y=c" in out

    def test_center(self):
        code, out, _ = call("center", ex("iom_not_prew"))
        assert code == 0 and "center = {0, 1}" in out

    def test_refute(self):
        code, out, _ = call("refute", "x /\\ y = y /\\ x", "--class", "qw", "--max-size", 6)
        assert code == 1 and "counterexample of size" in out
        code, out, _ = call("refute", "x -> 1 = 1", "--class", "be", "--max-size", 4)
        assert code == 0 and "no counterexample" in out

    def test_transform_round_trip(self, tmp_path):
        mbe = tmp_path / "m.alg"
        assert call("transform", ex("qw_noncommutative"), "--to", "mbe", "-o", mbe)[0] == 0
        code, out, _ = call("transform", mbe, "--to", "be")
        assert code == 0
        assert out.splitlines()[5:11] == \
            example_path("qw_noncommutative").read_text().splitlines()[6:12]

    def test_verify_theorems(self):
        code, out, _ = call("verify-theorems", "--size", 4, "--with-examples")
        assert code == 0 and "violations: 0" in out

    def test_fixtures(self):
        assert call("fixtures", ex("iom_not_prew"))[0] == 0
        assert call("fixtures", ex("prew_not_iom"), "--class", "iom")[0] == 1


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        ("frobnicate",),
        ("classify",),
        ("enumerate", "--size", "x"),
        ("classify", "/no/such/file.alg"),
        ("check", "--axiom", "QW9", "FILE"),
        ("refute", "x -> = y"),
        ("enumerate", "--size", "3", "--class", "heyting"),
        ("classify", "FILE", "--bogus"),
    ])
    def test_exit_two(self, argv):
        argv = [ex("qw_noncommutative") if a == "FILE" else a for a in argv]
        code, out, err = call(*argv)
        assert code == 2 and out == ""

    def test_effect_refuses_non_involutive(self, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("size 3\nelements 0 a 1\nunit 1\nzero 0\ntable -> :\n1 1 1\n0 1 1\n0 a 1\n")
        code, _, err = call("effect", p)
        assert code == 2 and "involutive" in err

    def test_malformed_file_reports_position(self, tmp_path):
        p = tmp_path / "bad.alg"
        p.write_text("size 2\nelements 0 1\nunit 1\nzero 0\ntable -> :\n1 1\n0 q\n")
        code, _, err = call("check", p)
        assert code == 2 and "bad.alg:7:3" in err

    def test_help(self):
        assert call("--help")[0] == 0


class TestJson:
    @pytest.mark.parametrize("argv", [
        ("classify", "iom_not_prew"),
        ("effect", "prew_not_iom"),
        ("center", "qw_noncommutative"),
        ("check", "metaw_not_iom"),
        ("fixtures", "qw_noncommutative"),
    ])
    def test_json_and_text_agree(self, argv):
        cmd, name = argv
        code_t, text, _ = call(cmd, ex(name))
        code_j, raw, _ = call(cmd, ex(name), "--json")
        assert code_t == code_j
        report = json.loads(raw)
        assert report["command"] == cmd and report["model"] == ex(name)
        assert set(report) == {"command", "model", "outcomes", "counts"}
        for rec in report["outcomes"]:
            assert rec["id"] in text
            assert set(rec) >= {"id", "status", "witness"}
        statuses = [line.split()[0] for line in text.splitlines()[1:]
                    if line.split() and line.split()[0] in ("PASS", "FAIL", "PREREQ_FAILED")]
        assert statuses == [r["status"] for r in report["outcomes"]]

    def test_json_flag_before_command(self):
        report = json.loads(call("--json", "effect", ex("prew_not_iom"))[1])
        e1 = report["outcomes"][0]
        assert e1 == {"id": "E1", "status": "FAIL", "witness": {"x": "b", "y": "d"},
                      "detail": "x (+) y defined but y (+) x undefined"}

    def test_enumerate_json_counts(self):
        report = json.loads(call("enumerate", "--size", 5, "--count-only", "--json")[1])
        assert report["counts"] == {"models": 14}
