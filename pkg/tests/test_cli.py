import json

import pytest

from cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from components.blf_io import parse
from components.config import Settings
from components.diagram import connectivity_report, euler_characteristic

S4 = """\
blf 1
arrangement
circle c inside=torus outside=sphere
faces
face sphere fiber=c0:0
face torus fiber=c0:1
folds
fold c high=torus low=sphere surgery=nonsep(c0)
"""


@pytest.fixture
def cli(capsys):
    def invoke(*argv, settings=None):
        code = run(list(argv), settings or Settings())
        return code, capsys.readouterr().out
    return invoke


def test_validate_ok(cli):
    assert cli("validate", "cp2") == (EXIT_OK, "OK\n")


def test_validate_by_path(cli, blf_settings):
    code, out = cli("validate", str(blf_settings.examples_dir / "s4.blf"))
    assert code == EXIT_OK


def test_validate_reports_violations(cli, tmp_path):
    path = tmp_path / "bad.blf"
    path.write_text(S4.replace("face torus fiber=c0:1", "face torus fiber=c0:2"))
    code, out = cli("validate", str(path))
    assert code == EXIT_FAIL
    assert out.startswith("V3 c ")


def test_strict_validation(cli, tmp_path):
    path = tmp_path / "warn.blf"
    path.write_text(S4 + "lefschetz\npoint L1 face=torus component=c0 order=1 cycle=0,0\n")
    code, out = cli("validate", str(path))
    assert code == EXIT_OK
    assert out.startswith("W2 L1 ")
    assert cli("validate", "--strict", str(path))[0] == EXIT_FAIL
    assert cli("validate", str(path), settings=Settings(strict=True))[0] == EXIT_FAIL


def test_euler(cli):
    assert cli("euler", "cp2") == (EXIT_OK, "3\n")
    assert cli("euler", "split_fiber") == (EXIT_OK, "-6\n")


def test_euler_of_a_pencil(cli, tmp_path):
    path = tmp_path / "pencil.blf"
    path.write_text(S4 + "basepoints\nbasepoints 1\nsections 0\n")
    assert cli("euler", str(path)) == (EXIT_OK, "1\n")


def test_report(cli):
    code, out = cli("report", "cp2")
    assert code == EXIT_OK
    assert "euler: 3" in out
    assert "parity: ok" in out
    assert "thom target: 1 Lefschetz point(s)" in out
    assert "lefschetz: 3" in out


def test_check_monodromy(cli):
    assert cli("check-monodromy", "cp2", "--face", "outer", "--class", "1,0,0,0") == (
        EXIT_OK, "OK (fixed up to sign)\n")
    code, out = cli("check-monodromy", "cp2", "--face", "outer", "--class", "0,1,0,0")
    assert code == EXIT_FAIL
    assert out == "FAIL (0,1,0,0 -> 9,1,0,0)\n"


def test_check_monodromy_bad_class(cli):
    assert cli("check-monodromy", "cp2", "--face", "outer", "--class", "1,2,3")[0] == EXIT_USAGE
    code, out = cli("check-monodromy", "cp2", "--face", "outer", "--class", "1,0")
    assert code == EXIT_FAIL
    assert out.startswith("GenusMismatch")


def test_apply(cli, tmp_path):
    script = tmp_path / "moves.txt"
    script.write_text("flip c\n")
    out_path = tmp_path / "out.blf"
    code, _ = cli("apply", "s4", str(script), "-o", str(out_path))
    assert code == EXIT_OK
    result = parse(out_path.read_text())
    assert (result.n_double, result.n_lefschetz) == (1, 2)


def test_apply_failure(cli, tmp_path):
    script = tmp_path / "moves.txt"
    script.write_text("r2 torus\n")
    code, out = cli("apply", "s4", str(script))
    assert code == EXIT_FAIL
    assert out.startswith("PreconditionViolated torus")


def test_connect_fibers(cli, tmp_path):
    out_path = tmp_path / "connected.blf"
    assert cli("connect-fibers", "split_fiber", "-o", str(out_path))[0] == EXIT_OK
    result = parse(out_path.read_text())
    assert connectivity_report(result).connected
    assert euler_characteristic(result) == -6


def test_export(cli):
    code, out = cli("export", "s4", "--format", "json")
    assert code == EXIT_OK
    assert [c["id"] for c in json.loads(out)["circles"]] == ["c"]
    code, out = cli("export", "s4")
    assert "circle c inside=torus outside=sphere arrow=torus->sphere surgery=nonsep(c0)" in out


def test_parse_errors_exit_2(cli, tmp_path):
    path = tmp_path / "broken.blf"
    path.write_text("blf 9\n")
    code, out = cli("euler", str(path))
    assert code == EXIT_USAGE
    assert out.startswith("SyntaxError 1:1 ")


def test_usage_errors(cli, tmp_path):
    assert cli()[0] == EXIT_USAGE
    assert cli("--help")[0] == EXIT_OK
    assert cli("euler", str(tmp_path / "missing.blf"))[0] == EXIT_USAGE
    assert cli("export", "cp2", "--format", "svg")[0] == EXIT_USAGE
