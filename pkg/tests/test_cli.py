import json
import shutil
import subprocess

import pytest

from circsort.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from circsort.constructions import affine
from circsort.textio import read_witness, write_witness

COUNTEREXAMPLE = "0 2 7 21 17 12 4 9 14 19 1 8 15 22 6 3 20 13 11 18 5 10 16"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_counterexample(tmp_path, capsys):
    path = tmp_path / "c23.txt"
    path.write_text("# expect t>=21\n" + COUNTEREXAMPLE + "\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_OK
    assert "t_coset = 21" in out
    assert "strong_complete" in out
    assert "23 x (1, 22)" in out
    code, out, _ = run(capsys, "verify", str(path), "--json")
    data = json.loads(out)
    assert set(data) == {"n", "t_coset", "shift_cycle_types", "mapping"}
    assert data["n"] == 23 and data["t_coset"] == 21
    assert data["shift_cycle_types"] == [[1, 22]] * 23
    assert data["mapping"] == {"orthomorphism": True, "complete": True,
                               "strong_complete": True}


def test_verify_affine_19_and_its_extension(tmp_path, capsys):
    pi = list(affine(19, 6).image)
    a, b = tmp_path / "pi.txt", tmp_path / "sigma.txt"
    a.write_text(" ".join(map(str, pi)) + "\n")
    b.write_text(" ".join(map(str, pi + [19])) + "\n")
    assert json.loads(run(capsys, "verify", str(a), "--json")[1])["t_coset"] == 16
    assert json.loads(run(capsys, "verify", str(b), "--json")[1])["t_coset"] == 15


def test_verify_identity_and_expect_failure(tmp_path, capsys):
    path = tmp_path / "id.txt"
    path.write_text("0 1 2 3 4 5 6\n")
    code, out, _ = run(capsys, "verify", str(path))
    assert code == EXIT_OK and "t_coset = 0" in out
    path.write_text("# expect t>=1\n0 1 2 3 4 5 6\n")
    code, _, err = run(capsys, "verify", str(path))
    assert code == EXIT_FAIL and "FAIL" in err


def test_verify_canonical_flag(tmp_path, capsys):
    path = tmp_path / "c23.txt"
    path.write_text(COUNTEREXAMPLE + "\n")
    data = json.loads(run(capsys, "verify", str(path), "--json",
                          "--canonical")[1])
    assert data["canonical_form"][0] == 0
    assert len(data["canonical_form"]) == 23


def test_verify_parse_and_missing_file(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("0 0 1\n")
    assert run(capsys, "verify", str(path))[0] == EXIT_USAGE
    assert run(capsys, "verify", str(tmp_path / "none.txt"))[0] == EXIT_USAGE


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == EXIT_USAGE


def test_t_exact_and_bounds(capsys):
    code, out, _ = run(capsys, "t", "exact", "6")
    assert code == EXIT_OK and out.startswith("t(6) = 3")
    code, out, _ = run(capsys, "t", "bounds", "22")
    assert "t(22) in [18,19]" in out
    assert "lower 18 via affine" in out
    assert run(capsys, "t", "exact", "10", "--budget", "5")[0] == EXIT_FAIL
    assert run(capsys, "t", "bounds", "1")[0] == EXIT_USAGE


@pytest.mark.parametrize("args,t", [
    (("affine", "23", "5"), 21),
    (("affine", "9", "2", "1"), 6),
    (("quadratic", "23", "5", "7"), 21),
    (("product", "3", "5"), 8),
    (("pq5", "7", "5"), 30),
    (("pq3", "7", "3"), 18),
])
def test_construct_writes_verified_witness(tmp_path, capsys, args, t):
    out = tmp_path / "w.txt"
    code, text, _ = run(capsys, "construct", *args, "--out", str(out))
    assert code == EXIT_OK
    assert f"t_coset = {t}" in text
    assert read_witness(out).expect == t
    assert run(capsys, "verify", str(out))[0] == EXIT_OK


def test_construct_wreath_format_and_errors(tmp_path, capsys):
    out = tmp_path / "w.txt"
    code, _, _ = run(capsys, "construct", "pq3", "5", "3", "--randomized",
                     "--seed", "2", "--format", "wreath", "--out", str(out))
    assert code == EXIT_OK
    assert out.read_text().splitlines()[0] == "5 3"
    assert run(capsys, "construct", "affine", "9", "2", "--format", "wreath",
               "--out", str(out))[0] == EXIT_FAIL
    assert run(capsys, "construct", "pq3", "7", "5", "--out", str(out))[0] == EXIT_USAGE
    assert run(capsys, "construct", "quadratic", "9", "2", "3",
               "--out", str(out))[0] == EXIT_USAGE


def test_search_scm(capsys):
    code, out, _ = run(capsys, "search", "scm", "13", "--count")
    assert code == EXIT_OK and out.strip() == "348"
    code, out, _ = run(capsys, "search", "scm", "7")
    assert out.splitlines() == ["0 2 4 6 1 3 5", "0 3 6 2 5 1 4",
                                "0 4 1 5 2 6 3", "0 5 3 1 6 4 2"]
    code, out, _ = run(capsys, "search", "scm", "11", "--target-n2",
                       "--normalize-slope", "--json")
    for line in out.splitlines():
        assert json.loads(line)["t_coset"] == 9
    code, out, _ = run(capsys, "search", "scm", "11", "--count",
                       "--prefix", "2,4")
    assert code == EXIT_OK and int(out) >= 0
    assert run(capsys, "search", "scm", "11", "--prefix", "1")[0] == EXIT_USAGE
    assert run(capsys, "search", "scm", "11", "--prefix", "a,b")[0] == EXIT_USAGE
    assert run(capsys, "search", "scm", "19", "--budget", "10")[0] == EXIT_FAIL


def test_search_avoid(capsys):
    code, out, err = run(capsys, "search", "avoid", "11", "--max-cycle", "3")
    assert code == EXIT_OK
    assert "found" in err
    for line in out.splitlines():
        assert line.split()[0] == "0"
    code, out, _ = run(capsys, "search", "avoid", "8", "--max-cycle", "1")
    assert out == ""


def test_table(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "--max", "12")
    assert code == EXIT_OK
    assert [line.split()[0] for line in out.splitlines()[1:]] == \
        ["4", "6", "8", "9", "10", "12"]
    bad = tmp_path / "wit"
    bad.mkdir()
    write_witness(bad / "x.txt", [affine(9, 2)], expect=8)
    assert run(capsys, "table", "--max", "12", "--witness-dir", str(bad))[0] == EXIT_FAIL


def test_console_script_installed(tmp_path):
    exe = shutil.which("circsort")
    assert exe is not None
    path = tmp_path / "c.txt"
    path.write_text(COUNTEREXAMPLE + "\n")
    res = subprocess.run([exe, "verify", str(path), "--json"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout)["t_coset"] == 21
