import io
import json

from shiftalg.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_elem_comm():
    assert run("elem", "comm", "C(1,0)", "C(0,1)") == (0, "C(1,1) - C(0,0)\n")


def test_elem_eval_canonicalizes():
    assert run("elem", "eval", "U*^1*U^1 + U^1*U*^1") == (0, "2 - C(0,0)\n")


def test_parse_error_exit_2(capsys):
    code, _ = run("elem", "eval", "U^2 + + E")
    assert code == 2
    err = capsys.readouterr().err
    assert "position 6" in err and "'+'" in err


def test_usage_error_exit_2(capsys):
    assert run("bogus")[0] == 2
    assert run("mat", "dump", "E")[0] == 2
    assert run("h2", "--m", "9")[0] == 2
    assert run("audit", "run", "--claims", "NOPE")[0] == 2
    assert run("audit", "run", "--eps", "x/y")[0] == 2


def test_mat_dump_four_site():
    code, text = run("mat", "dump", "U'^1 + 3/10 E", "--n", "4")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "i,j,re,im" and len(lines) == 17
    nonzero = [l for l in lines[1:] if l.split(",")[2] != "0"]
    assert nonzero == ["0,0,0.29999999999999999,0", "0,1,1,0", "1,2,1,0", "2,3,1,0"]


def test_spectrum_sweep():
    code, text = run("spectrum", "sweep", "--variant", "backward", "--n", "16",
                     "--eps-from", "-1.5", "--eps-to", "1.5", "--steps", "13")
    rows = text.splitlines()
    assert code == 0 and len(rows) == 1 + 13 * 16
    edges = [r.split(",") for r in rows[1:] if r.endswith(",1")]
    assert len(edges) == 13
    assert all(float(e[0]) == float(e[3]) for e in edges)


def test_h2():
    code, text = run("h2", "--m", "2")
    doc = json.loads(text)
    assert code == 0
    assert list(doc) == ["M", "dim", "rank_d1", "dim_ker_d2", "betti2", "omega_exactness"]
    assert doc["betti2"] == 0 and doc["dim"] == 9


def test_audit_run_strict_and_out(tmp_path):
    path = tmp_path / "r.json"
    code, text = run("audit", "run", "--window", "3", "--claims", "UME,JAC",
                     "--format", "structured", "--out", str(path), "--strict")
    assert code == 0 and text == ""
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert [c["id"] for c in doc["claims"]] == ["JAC", "UME"]
    assert doc["config"]["eps"] == "3/10"


def test_audit_strict_detects_unexpected(monkeypatch):
    import shiftalg.audit as audit

    monkeypatch.setitem(audit.EXPECTED, "JAC", "FAIL")
    assert run("audit", "run", "--window", "2", "--claims", "JAC", "--strict")[0] == 1
    assert run("audit", "run", "--window", "2", "--claims", "JAC")[0] == 0
