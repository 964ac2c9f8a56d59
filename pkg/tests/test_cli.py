"""Command-line interface: verbs, formats, exit codes."""

import io
import json

from moulde import words
from moulde.cli import run
from moulde.mould import ma, mould_from_json_text, mould_to_json_text
from moulde.words import ncpoly_to_text


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def _write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- dims --------------------------------------------------------------------

def test_dims_text():
    code, out, err = _run(["dims", "--space", "lkv",
                           "--n", "3..5", "--r", "1..2"])
    assert code == 0 and err == ""
    assert "lkv" in out
    # stable across invocations
    assert out == _run(["dims", "--space", "lkv",
                        "--n", "3..5", "--r", "1..2"])[1]


def test_dims_json():
    code, out, _ = _run(["dims", "--space", "ls", "--n", "3..4",
                         "--r", "1..1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    cells = {(c["n"], c["r"]): c["dim"] for c in doc["cells"]}
    assert cells[(3, 1)] == 1 and cells[(4, 1)] == 0


def test_dims_vkrv_rejected():
    # vkrv is graded by weight only; the (n, r) grid does not apply
    code, _, err = _run(["dims", "--space", "vkrv", "--n", "3", "--r", "1"])
    assert code == 2 and "usage error" in err


def test_dims_unknown_space():
    code, _, err = _run(["dims", "--space", "nope", "--n", "3", "--r", "1"])
    assert code == 2 and "usage error" in err


# -- basis -------------------------------------------------------------------

def test_basis_lkv():
    code, out, _ = _run(["basis", "--space", "lkv", "--n", "3", "--r", "1"])
    assert code == 0
    assert "dim=1" in out


def test_basis_requires_r():
    code, _, err = _run(["basis", "--space", "lkv", "--n", "3"])
    assert code == 2 and "usage error" in err


# -- check / identity --------------------------------------------------------

def test_check_wkrv_accepts(tmp_path, w3):
    path = _write(tmp_path, "w3.txt", ncpoly_to_text(w3))
    code, out, _ = _run(["check", "--input", path, "--space", "wkrv"])
    assert code == 0
    assert "in_w_krv: True" in out


def test_check_wkrv_rejects(tmp_path, b3):
    path = _write(tmp_path, "b3.txt", ncpoly_to_text(b3))
    code, out, _ = _run(["check", "--input", path, "--space", "wkrv"])
    assert code == 1
    assert "in_w_krv: False" in out


def test_identity_senary_fail(tmp_path, b3):
    path = _write(tmp_path, "b3.txt", ncpoly_to_text(b3))
    code, out, _ = _run(["identity", "--name", "senary", "--input", path])
    assert code == 1 and "FAIL" in out


def test_identity_goodfund_ok(tmp_path, w3):
    path = _write(tmp_path, "w3.txt", ncpoly_to_text(w3))
    code, out, _ = _run(["identity", "--name", "goodfund", "--input", path,
                         "--depth", "4"])
    assert code == 0 and "OK" in out


def test_identity_ganit_inverse(tmp_path, b3):
    path = _write(tmp_path, "b3.txt", ncpoly_to_text(b3))
    code, out, _ = _run(["identity", "--name", "ganit_inverse",
                         "--input", path, "--depth", "3"])
    assert code == 0 and "OK" in out


# -- apply -------------------------------------------------------------------

def test_apply_swap_roundtrip(tmp_path, b3):
    src = _write(tmp_path, "m.json", mould_to_json_text(ma(b3)))
    mid = str(tmp_path / "swapped.json")
    code, _, _ = _run(["apply", "--op", "swap", "--input", src,
                       "--output", mid, "--format", "json"])
    assert code == 0
    back = str(tmp_path / "back.json")
    code, _, _ = _run(["apply", "--op", "swap", "--input", mid,
                       "--output", back, "--format", "json"])
    assert code == 0
    with open(back) as fh:
        M = mould_from_json_text(fh.read())
    assert M.eq(ma(b3))


def test_apply_unknown_op(tmp_path, b3):
    src = _write(tmp_path, "m.json", mould_to_json_text(ma(b3)))
    code, _, err = _run(["apply", "--op", "zap", "--input", src])
    assert code == 2 and "usage error" in err


# -- section -----------------------------------------------------------------

def test_section_b3(tmp_path, b3):
    path = _write(tmp_path, "b3.txt", ncpoly_to_text(b3))
    code, out, _ = _run(["section", "--input", path, "--depth", "4"])
    assert code == 0
    assert "depth 1" in out and "depth 3" in out


def test_section_rejects_non_vkrv(tmp_path):
    path = _write(tmp_path, "f.txt", "1*xy - 1*yx")
    code, _, err = _run(["section", "--input", path])
    assert code == 1 and "gate failure" in err


# -- dump --------------------------------------------------------------------

def test_dump_poc_text():
    code, out, _ = _run(["dump", "--mould", "poc", "--depth", "3"])
    assert code == 0
    assert out == _run(["dump", "--mould", "poc", "--depth", "3"])[1]


def test_dump_json_parses():
    code, out, _ = _run(["dump", "--mould", "pic", "--depth", "2",
                         "--format", "json"])
    assert code == 0
    M = mould_from_json_text(out)
    assert sorted(M.depths()) == [1, 2]


def test_dump_unknown():
    code, _, err = _run(["dump", "--mould", "nope"])
    assert code == 2 and "usage error" in err


# -- top-level ---------------------------------------------------------------

def test_no_verb():
    code, _, err = _run([])
    assert code == 2 and "usage error" in err


def test_missing_file():
    code, _, err = _run(["check", "--input", "/no/such/file"])
    assert code == 2
