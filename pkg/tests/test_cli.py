import io
import json
import subprocess
import sys

import pytest

from slmtangle.cli import main


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


def test_eval_unknot(corpus_dir):
    assert run("eval", "--m", "2", str(corpus_dir / "unknot.tgl")) == (0, "q + q^-1\n", "")


def test_eval_json(corpus_dir):
    code, out, _ = run("eval", "--m", "3", str(corpus_dir / "unknot.tgl"), "--json")
    assert code == 0
    assert json.loads(out) == {"invariant": {"2": 1, "0": 1, "-2": 1}}
    assert out == '{"invariant": {"2": 1, "0": 1, "-2": 1}}\n'


def test_eval_check_resolution(corpus_dir):
    code, out, _ = run("eval", "--m", "2", str(corpus_dir / "hopf.tgl"), "--check-resolution")
    assert code == 0
    assert out == "q^6 + q^4 + q^2 + 1\nresolution: q^6 + q^4 + q^2 + 1\nEQUAL\n"


def test_eval_check_resolution_json_with_unlike_crossing(corpus_dir):
    code, out, _ = run("eval", "--m", "3", str(corpus_dir / "side-kink.tgl"), "--check-resolution", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == "EQUAL"


def test_eval_reads_stdin():
    assert run("eval", "--m", "2", stdin="cap 1; cup 1")[:2] == (0, "q + q^-1\n")
    assert run("eval", "--m", "2", "-", stdin="cap 1; cup 1")[:2] == (0, "q + q^-1\n")


def test_flipped_cap_makes_resolution_differ(corpus_dir):
    code, out, _ = run("eval", "--m", "2", str(corpus_dir / "unknot.tgl"), "--check-resolution", "--debug-flip-cap-sign")
    assert code == 3
    assert out.endswith("DIFFER\n")


def test_output_is_byte_stable(corpus_dir):
    argv = ("eval", "--m", "3", str(corpus_dir / "figure-eight.tgl"), "--check-resolution", "--json")
    assert run(*argv) == run(*argv)
    argv = ("test-relations", "--m", "3", "--max-n", "3", "--json")
    assert run(*argv) == run(*argv)


@pytest.mark.parametrize(
    "argv, stdin, code",
    [
        (("eval", "--m", "2"), "cap x", 1),
        (("eval", "--m", "2", "no/such/file.tgl"), "", 1),
        (("eval", "--m", "3"), "m=2\ncap 1\ncup 1", 1),
        (("eval",), "cap 1; cup 1", 1),
        (("eval", "--m", "1"), "cap 1; cup 1", 1),
        (("frobnicate", "--m", "2"), "", 1),
        (("eval", "--m", "2"), "cap 1; cup 2", 2),
        (("eval", "--m", "2"), "cap 1", 2),
        (("poincare", "--m", "2"), "braid k=2 [1]", 2),
        (("matrix", "--m", "3", "--bottom", "1,1,1,1", "--matrix-cap", "100"), "cross 1 1", 4),
        (("test-relations", "--m", "4", "--max-n", "4", "--matrix-cap", "100"), "", 4),
        (("test-relations", "--m", "3", "--max-n", "3", "--debug-flip-cap-sign"), "", 3),
        (("test-relations", "--m", "3", "--family", "R9"), "", 1),
        (("matrix", "--m", "2", "--bottom", "1,x"), "cross 1 1", 1),
        (("matrix", "--m", "2", "--bottom", "1,1"), "bottom 1,1\ncross 1 1", 1),
    ],
)
def test_exit_codes(argv, stdin, code):
    got, out, err = run(*argv, stdin=stdin)
    assert got == code, (out, err)
    assert err.startswith("error:") or code == 3 or "usage" in err or err == ""


def test_errors_go_to_stderr_with_line_numbers():
    code, out, err = run("eval", "--m", "2", stdin="cap 1\ncup 1\ndumbbell 1")
    assert code == 2 and out == ""
    assert "line 3" in err


def test_poincare(corpus_dir):
    assert run("poincare", "--m", "3", str(corpus_dir / "unknot.tgl")) == (0, "-2 1\n0 1\n2 1\n", "")
    code, out, _ = run("poincare", "--m", "3", str(corpus_dir / "theta.tgl"), "--json")
    assert json.loads(out) == {"poincare": {"-3": 1, "-1": 2, "1": 2, "3": 1}}


def test_poincare_negative_coefficient_exits_3(monkeypatch, corpus_dir):
    import slmtangle.ktheory as kt
    from slmtangle.laurent import parse_laurent

    monkeypatch.setattr(kt, "evaluate_closed", lambda word: parse_laurent("q - 1"))
    code, _, err = run("poincare", "--m", "2", str(corpus_dir / "unknot.tgl"))
    assert code == 3 and "positivity" in err


def test_matrix_single_cap():
    assert run("matrix", "--m", "3", "--expr", "cap 1") == (0, "3 0 2\n02 - q^2\n11 - -q\n20 - 1\n", "")


def test_matrix_identity_and_r2():
    ident = "2 2 2\n00 00 1\n01 01 1\n10 10 1\n11 11 1\n"
    assert run("matrix", "--m", "2", "--bottom", "1,1", "--expr", "")[1] == ident
    assert run("matrix", "--m", "2", "--bottom", "1,1", "--expr", "cross 1 1; cross 1 2")[1] == ident


def test_matrix_reads_a_file(tmp_path):
    path = tmp_path / "w.tgl"
    path.write_text("m=3\nbottom 1,2\ncross 1 1\ncross 1 2\n")
    code, out, _ = run("matrix", "--m", "3", str(path))
    assert code == 0 and out.splitlines()[0] == "3 2 2"
    assert len(out.splitlines()) == 1 + 9


def test_test_relations_table():
    code, out, _ = run("test-relations", "--m", "3", "--max-n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("PASS ")
    assert "-- summary" in lines
    assert lines[-1].startswith("braid") and lines[-1].endswith("0 failed")


def test_test_relations_m2_reports_pitchfork_failures():
    code, out, _ = run("test-relations", "--m", "2", "--max-n", "4", "--json")
    assert code == 3
    payload = json.loads(out)
    failed = {f for f, s in payload["summary"].items() if s["failed"]}
    assert failed == {"pitchfork"}


def test_module_entry_point(corpus_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "slmtangle", "eval", "--m", "4", str(corpus_dir / "unknot.tgl")],
        capture_output=True, text=True, check=False,
    )
    assert (proc.returncode, proc.stdout) == (0, "q^3 + q + q^-1 + q^-3\n")
