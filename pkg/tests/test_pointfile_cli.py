import json
from importlib import resources

import jsonschema
import numpy as np
import pytest

from fourgen import constructions as C
from fourgen.cli import FAIL, OK, USAGE, main
from fourgen.pointfile import DuplicateError, FieldError, HeaderError, PointFileError, RangeError, dumps, load_pointset, loads, save_pointset


def _schema(name):
    return json.loads(resources.files("fourgen").joinpath("schemas", f"{name}.json").read_text())


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("build", [lambda: C.frame(3, 2), lambda: C.cyclic_theta0(2, 4), lambda: C.elliptic_quadric(5), lambda: C.pg516()])
def test_roundtrip(build, tmp_path):
    x = build()
    path = tmp_path / "x.pts"
    save_pointset(x, path, "round trip")
    y = load_pointset(path)
    assert y.same_points(x) and y.field.modulus == x.field.modulus
    assert (y.coords == x.coords).all()


HEAD = "# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=2\n"


@pytest.mark.parametrize(
    "text,err",
    [
        ("field p=2 k=1 modulus=3\nn=2\n1 0 0\n", HeaderError),
        ("# fourgen pointset v1\nn=2\n1 0 0\n", HeaderError),
        ("# fourgen pointset v1\nfield p=2 k=1 modulus=3\ndim 2\n1 0 0\n", HeaderError),
        ("# fourgen pointset v1\nfield p=4 k=1 modulus=3\nn=2\n1 0 0\n", FieldError),
        ("# fourgen pointset v1\nfield p=2 k=2 modulus=5\nn=2\n1 0 0\n", FieldError),
        (HEAD + "1 0 2\n", RangeError),
        (HEAD + "0 0 0\n", RangeError),
        (HEAD + "1 0 0\n1 0 0\n", DuplicateError),
        (HEAD + "1 0\n", PointFileError),
        (HEAD + "1 x 0\n", PointFileError),
        (HEAD, PointFileError),
    ],
)
def test_load_errors(text, err):
    with pytest.raises(err):
        loads(text)


def test_duplicate_projective_multiple():
    text = "# fourgen pointset v1\nfield p=3 k=1 modulus=5\nn=2\n1 2 0\n2 1 0\n"
    with pytest.raises(DuplicateError) as e:
        loads(text)
    assert e.value.line == 5 and e.value.code == "duplicate"


def test_comments_ignored():
    x = loads(HEAD + "# note\n1 0 0  # first\n0 1 0\n\n0 0 1\n")
    assert len(x) == 3


def test_construct_verify_cycle(tmp_path, capsys):
    path = tmp_path / "eq.pts"
    code, _, _ = _run(capsys, "construct", "elliptic_quadric", "--q", "2", "-o", str(path))
    assert code == OK and load_pointset(path).q == 2
    code, out, _ = _run(capsys, "verify", str(path), "--complete", "--json")
    assert code == OK
    rep = json.loads(out)
    jsonschema.validate(rep, _schema("verify"))
    assert rep["complete"] is True


def test_verify_fail_exit(tmp_path, capsys):
    path = tmp_path / "bad.pts"
    path.write_text("# fourgen pointset v1\nfield p=2 k=1 modulus=3\nn=3\n1 0 0 0\n0 1 0 0\n1 1 0 0\n0 0 1 0\n0 0 0 1\n")
    code, out, _ = _run(capsys, "verify", str(path))
    assert code == FAIL and "collinear" in out
    path.write_text(dumps(C.htw_y(2)))
    code, out, _ = _run(capsys, "verify", str(path), "--complete", "--json")
    assert code == FAIL
    jsonschema.validate(json.loads(out), _schema("verify"))


def test_usage_errors(tmp_path, capsys):
    assert _run(capsys, "construct", "nope")[0] == USAGE
    assert _run(capsys, "construct", "theta0", "--q", "3")[0] == USAGE
    assert _run(capsys, "frobnicate")[0] == USAGE
    assert _run(capsys, "verify", str(tmp_path / "missing.pts"))[0] == USAGE
    bad = tmp_path / "bad.pts"
    bad.write_text("hello\n")
    code, _, err = _run(capsys, "verify", str(bad))
    assert code == USAGE and "error[header]" in err
    p = tmp_path / "eq.pts"
    save_pointset(C.elliptic_quadric(2), p)
    assert _run(capsys, "complete", str(p), "--order", "random")[0] == USAGE
    assert _run(capsys, "search", "classify", "--n", "6", "--q", "2")[0] == USAGE


def test_construct_json(capsys):
    code, out, _ = _run(capsys, "construct", "theta0", "--d", "2", "--q", "3", "--json")
    assert code == OK
    payload = json.loads(out)
    jsonschema.validate(payload, _schema("construct"))
    assert payload["size"] == 5


def test_complete_and_aut(tmp_path, capsys):
    p = tmp_path / "y.pts"
    save_pointset(C.htw_y(2), p)
    out_path = tmp_path / "z.pts"
    code, out, _ = _run(capsys, "complete", str(p), "--json", "-o", str(out_path))
    assert code == OK and json.loads(out)["size"] == 11
    code, out, _ = _run(capsys, "aut", str(tmp_path / "z.pts"), "--json")
    assert code == OK
    payload = json.loads(out)
    jsonschema.validate(payload, _schema("aut"))
    assert payload["aut_order"] == 7920


def test_code_json(tmp_path, capsys):
    p = tmp_path / "g.pts"
    save_pointset(C.golay_cap23(), p)
    code, out, _ = _run(capsys, "code", str(p), "--json")
    assert code == OK
    payload = json.loads(out)
    jsonschema.validate(payload, _schema("code"))
    assert payload["d"] == 7 and payload["exceptions"]


def test_bounds_json(capsys):
    code, out, _ = _run(capsys, "bounds", "--n", "5", "--q", "5", "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, _schema("bounds"))
    assert code == OK and payload["m3_upper"] == 44
    code, out, _ = _run(capsys, "bounds", "--n", "3", "--q", "2")
    assert "M3(3,2) <= 5" in out


def test_search_classify_json(capsys):
    code, out, _ = _run(capsys, "search", "classify", "--n", "4", "--q", "2", "--json")
    payload = json.loads(out)
    jsonschema.validate(payload, _schema("classify"))
    assert code == OK and [c["aut"] for c in payload["classes"]] == [720, 120]
    code, out, _ = _run(capsys, "search", "max", "--n", "3", "--q", "2")
    assert code == OK and "max size 5" in out


def test_curves_cli(capsys):
    assert _run(capsys, "curves", "cubic1", "--q", "16")[0] == OK
    assert _run(capsys, "curves", "cubic2", "--q", "16", "--gamma", "5")[0] == OK
    assert _run(capsys, "curves", "net", "--q", "3")[0] == USAGE
    code, out, _ = _run(capsys, "curves", "net", "--q", "3", "--trials", "5", "--seed", "3", "--json")
    assert code == OK and json.loads(out)["empty_base_loci"] == 0


def test_console_entry(tmp_path):
    import subprocess
    import sys

    r = subprocess.run([sys.executable, "-m", "fourgen", "bounds", "--n", "4", "--q", "3"], capture_output=True, text=True)
    assert r.returncode == 0 and "M3(4,3) <= 11" in r.stdout
