import io
import json

import pytest

from qgsmash.cli import header, main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_qg_build_lists_first_component():
    code, out = run("qg", "build", "--quiver", "kronecker:3", "--action", "gl:3",
                    "--component", "2:[1]")
    assert code == 0
    assert out.splitlines()[0] == header("qg build")
    for v in ("1:[2]", "1:[1,1]", "2:[1]"):
        assert v in out


def test_qg_build_json_and_trivial_action():
    code, out = run("qg", "build", "--quiver", "kronecker:2", "--action", "trivial", "--json")
    assert code == 0
    d = json.loads(out.splitlines()[1])
    assert d


def test_rc_emit_yale_is_one_based_triplets():
    code, out = run("rc", "emit", "--quiver", "kronecker:2", "--action", "symmetric",
                    "--format", "yale")
    assert code == 0
    assert "arrow a1" in out and "arrow a2" in out
    lines = [x.strip() for x in out.splitlines()]
    k = lines.index("B2")
    # B2 sits at row 1, column 2 of the first arrow
    assert lines[k + 1:k + 4] == ["1", "1", "2"]


def test_output_is_reproducible():
    argv = ("--seed", "3", "tc", "project", "--quiver", "kronecker:3", "--action", "gl:3",
            "--component", "2:[1]", "--dims", "1,2", "--decompose")
    assert run(*argv) == run(*argv)


def test_semiinv_check_at_scale_two():
    code, out = run("semiinv", "check", "--family", "k3-first-top", "--a", "2", "--trials", "2",
                    "--group-trials", "1")
    assert code == 0, out
    assert "transformation: pass" in out


def test_idempotents_print():
    code, out = run("idempotents", "print", "--n", "2", "--d", "2")
    assert code == 0
    assert len(out.splitlines()) == 1 + 4


def test_verify_suite_exit_code():
    code, out = run("verify", "foundations")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("suite foundations:")


@pytest.mark.parametrize("argv", [
    ("verify", "no-such-suite"),
    ("semiinv", "eval", "--family", "nope"),
    ("tc", "project", "--quiver", "kronecker:3", "--action", "gl:3", "--component", "2:[1]",
     "--dims", "1"),
    ("qg", "build", "--quiver", "kronecker:3", "--action", "gl:3"),
    ("idempotents", "print", "--n", "2", "--d", "5"),
])
def test_usage_errors_exit_two(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")
