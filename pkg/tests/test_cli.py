import io
import json
import subprocess
import sys

import pytest

from g3hyp.cli import execute, octavic_arg, run
from g3hyp.forms import BinaryForm


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


# -- input syntax ---------------------------------------------------------------

def test_octavic_syntaxes_agree():
    full = octavic_arg("1,0,0,0,14,0,0,0,1")
    assert octavic_arg("1,0,14,0,1") == full
    assert octavic_arg("8:1,4:14,0:1") == full
    assert full == BinaryForm.from_dict(8, {8: 1, 4: 14, 0: 1})


@pytest.mark.parametrize("text", ["1,2,3", "9:1", "1,0.5,0,0,1", "a:b"])
def test_octavic_syntax_errors(text):
    with pytest.raises(ValueError):
        octavic_arg(text)


# -- subcommands ----------------------------------------------------------------

def test_invariants_of_the_octahedral_curve():
    r = report("invariants", "--octavic", "1,0,14,0,1")
    assert r["shioda"]["J2"] == "672" and r["shioda"]["J3"] == "87808"
    assert r["moduli_point"] == {"branch": "I", "values": ["686/27", "0", "0", "0", "0", "0"]}


def test_dihedral_subcommand():
    r = report("dihedral", "--abc", "1,1,3")
    assert r["dihedral"] == {"branch": "generic", "values": ["3", "10", "82"]}
    assert "Delta" in r


def test_classify_dihedral_example():
    r = report("classify", "--dihedral", "1,6,2")
    assert (r["group"], r["certainty"]) == ("Z2cubed", "exact")


def test_classify_routes():
    assert report("classify", "--abc", "0,14,0")["group"] == "Z2xS4"
    assert report("classify", "--dihedral", "196", "--branch", "full")["group"] == "Z2xS4"
    assert report("classify", "--octavic", "1,0,0,0,0,0,0,0,-1")["group"] == "V8"
    assert report("classify", "--octavic", "7:1,0:-1")["group"] == "X7special"


def test_reconstruct_subcommand():
    r = report("reconstruct", "--dihedral", "1,1,3")
    assert r["field"] == "quadratic" and r["d"] == "5"
    r = report("reconstruct", "--dihedral", "0,1,1", "--root", "-1")
    assert r["field"] == "moduli"


def test_isomorphic_subcommand():
    r = report("isomorphic", "--octavic1", "1,0,0,0,0,0,0,0,-1", "--octavic2", "1,0,0,0,0,0,0,0,1")
    assert r["isomorphic"] is True and all(w["satisfied"] for w in r["witnesses"])
    r = report("isomorphic", "--octavic1", "1,0,14,0,1", "--octavic2", "1,0,0,0,-1")
    assert r["isomorphic"] is False


def test_subcovers_subcommand():
    r = report("subcovers", "--abc", "1,0,0")  # s = (0, 0, 1)
    assert r["elliptic_j"] == "442368/229" and r["elliptic_j_method"] == "dihedral closed form"
    assert r["genus2"]["sextic"]["degree"] == 6
    # a = c = 0 has no generic dihedral point; the quartic oracle takes over
    assert report("subcovers", "--abc", "0,3,0")["elliptic_j_method"] == "quartic invariants"


def test_sample_subcommand():
    r = report("sample", "--group", "Z2cubed", "--params", "1,3")
    assert r["octavic"]["coeffs"] == ["1", "0", "4", "0", "5", "0", "4", "0", "1"]


def test_verify_subcommand():
    r = report("verify", "--suite", "bridge", "--samples", "6", "--seed", "7")
    assert r["passed"] and r["suite"] == "bridge"


def test_text_format():
    code, out, _ = call("--format", "text", "dihedral", "--abc", "1,3,1")
    assert code == 0
    assert 'dihedral.values.1: "6"' in out.splitlines()


# -- exit codes -----------------------------------------------------------------

@pytest.mark.parametrize(
    "argv, code, fragment",
    [
        (["invariants", "--octavic", "1.5,0,0,0,1"], 2, "usage error"),
        (["bogus"], 2, "usage error"),
        (["classify", "--abc", "1,1,1", "--dihedral", "1,6,2"], 2, "exactly one"),
        (["dihedral", "--abc", "1,2"], 2, "expected 3"),
        (["reconstruct", "--dihedral", "1,0,2"], 3, "Delta"),
        (["dihedral", "--abc", "0,2,0"], 3, "singular curve"),
        (["sample", "--group", "Z2xD8", "--params", "2"], 3, "degenerate"),
        (["invariants", "--octavic", "8:1"], 3, "singular octavic"),
    ],
)
def test_exit_codes(argv, code, fragment):
    got, out, err = call(*argv)
    assert got == code
    assert fragment in err
    assert out == ""


def test_internal_error_exit_code(monkeypatch):
    import g3hyp.cli as cli

    def boom(*_):
        raise KeyError("invariant breach")

    monkeypatch.setattr(cli, "dihedral_invariants", boom)
    out = execute(["dihedral", "--abc", "1,1,3"])
    assert out.code == 4 and "KeyError" in out.diagnostic


def test_failing_suite_exits_4(monkeypatch):
    import g3hyp.cli as cli

    monkeypatch.setattr(cli, "run_verify", lambda *a: {"passed": False})
    assert execute(["verify", "--suite", "bridge"]).code == 4


# -- determinism ------------------------------------------------------------------

def _console(argv, threads):
    env = {"G3HYP_THREADS": str(threads), "PATH": "/usr/bin:/bin"}
    proc = subprocess.run(
        [sys.executable, "-m", "g3hyp.cli", *argv], capture_output=True, env=env, check=False
    )
    return proc.returncode, proc.stdout


def test_verify_output_is_byte_identical_across_runs_and_workers():
    argv = ["verify", "--suite", "roundtrip", "--samples", "8", "--seed", "3"]
    first = _console(argv, 1)
    assert first[0] == 0
    assert _console(argv, 1) == first
    assert _console(argv, 3) == first


def test_no_floats_in_reports():
    r = report("verify", "--suite", "discriminant", "--samples", "4", "--seed", "1")

    def walk(x):
        if isinstance(x, float):
            raise AssertionError(f"float in report: {x}")
        if isinstance(x, dict):
            for v in x.values():
                walk(v)
        if isinstance(x, list):
            for v in x:
                walk(v)

    walk(r)
    walk(report("reconstruct", "--dihedral", "1,1,3"))
