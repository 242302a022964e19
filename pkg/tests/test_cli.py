import json
import subprocess
import sys

import pytest

from systemic.cli import EXIT_USAGE, main
from systemic.instancefile import DATA_DIR, shipped_files


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("path", shipped_files(), ids=lambda p: p.name)
def test_validate_shipped_files(capsys, path):
    code, out, _ = run(capsys, "validate", str(path))
    # the boolean semifield is shipped as the negative example
    assert code == (1 if path.name == "bool.sys" else 0), out


def test_validate_reports_bool_failure(capsys):
    code, out, _ = run(capsys, "validate", str(DATA_DIR / "bool.sys"), "--format",
                       "structured")
    rep = json.loads(out)
    failed = [r["clause"] for r in rep["records"] if r["verdict"] == "fail"]
    assert code == 1 and failed == ["tangibles-avoid-quasi-zeros"]


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as e:
        main(["suite", "nosuch"])
    assert e.value.code == EXIT_USAGE
    code, _, err = run(capsys, "validate", str(tmp_path / "missing.sys"))
    assert code == EXIT_USAGE and "error" in err
    bad = tmp_path / "bad.sys"
    bad.write_text("kind system\nelem 0\nzero 1\none 0\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == EXIT_USAGE and "bad.sys:3" in err
    code, _, _ = run(capsys, "matrix", str(DATA_DIR / "supertrop-B.sys"), "--check", "idem")
    assert code == EXIT_USAGE


def test_structured_output_is_stable(capsys):
    argv = ["suite", "axioms", "--format", "structured"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    # bool is in the sweep and fails one axiom on purpose
    assert first == second and first[0] == 1
    assert json.loads(first[1])["suite"] == "axioms"


def test_projective_verb(capsys):
    code, out, _ = run(capsys, "projective", "supertrop-B", "--kind", "h")
    assert code == 0 and "pass=1 fail=0" in out
    code, out, _ = run(capsys, "projective", str(DATA_DIR / "supertrop-B-free2.mod"),
                       "--kind", "succeq", "--format", "structured")
    assert code == 0 and json.loads(out)["records"][0]["verdict"] == "pass"


@pytest.mark.parametrize("check", ["idem", "vnr", "colspace"])
def test_matrix_verb(capsys, check):
    code, out, _ = run(capsys, "matrix", str(DATA_DIR / "supertrop-B-2x2.mat"),
                       "--check", check)
    assert code == 0, out


@pytest.mark.parametrize("mode", ["strict", "preceq"])
def test_schanuel_verb(capsys, mode):
    code, out, _ = run(capsys, "schanuel", str(DATA_DIR / "supertrop-B-id.map"),
                       str(DATA_DIR / "supertrop-B-sum.map"), "--mode", mode,
                       "--format", "structured")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0 and rep["summary"]["pass"] > 0


def test_list_verb(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "sym-bool" in out and "trsh11" in out


def test_console_script_matches_in_process(capsys):
    argv = ["validate", str(DATA_DIR / "supertrop-B.sys"), "--format", "structured"]
    proc = subprocess.run([sys.executable, "-m", "systemic.cli", *argv],
                          capture_output=True, text=True, check=False)
    code, out, _ = run(capsys, *argv)
    assert proc.returncode == code == 0
    assert proc.stdout == out
