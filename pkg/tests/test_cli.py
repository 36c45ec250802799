import io
import json

import pytest

from skeinquot import cli


def call(*argv):
    buf = io.StringIO()
    code = cli.run(["--no-timestamp" if a == "@nots" else a for a in argv], stream=buf)
    return code, buf.getvalue()


def rows(text):
    lines = [l for l in text.splitlines() if l and not l.startswith("#")]
    head = lines[0].split("\t")
    return [dict(zip(head, l.split("\t"))) for l in lines[1:] if "\t" in l]


def test_dims_example():
    code, out = call("dims", "--g", "2", "--p", "7", "--label", "4", "--no-timestamp")
    assert code == 0
    (row,) = rows(out)
    assert row["dim"] == "14" and row["g"] == "2" and row["p"] == "7"


def test_dims_all_methods_agree():
    code, out = call("dims", "--g", "1", "2", "--p", "5", "7", "--labels", "2,2", "--method", "all",
                     "--no-timestamp")
    assert code == 0
    assert "FAIL" not in out


def test_timestamp_line(monkeypatch):
    monkeypatch.delenv(cli.NO_TS_ENV, raising=False)
    code, out = call("dims", "--g", "2", "--p", "7")
    assert code == 0 and out.startswith("# generated ")
    monkeypatch.setenv(cli.NO_TS_ENV, "1")
    assert not call("dims", "--g", "2", "--p", "7")[1].startswith("#")


def test_square_scan_clean():
    code, out = call("square-scan", "--max", "2000", "--no-timestamp")
    assert code == 0 and out.rstrip().endswith("0 squares found")


def test_verify_lemmas_passes():
    code, out = call("verify-lemmas", "--p", "11", "--gmax", "4", "--no-timestamp")
    assert code == 0
    assert "FAIL" not in out


def test_json_output():
    code, out = call("dims", "--g", "3", "--p", "7", "--label", "4", "--json", "--no-timestamp")
    doc = json.loads(out)
    assert code == 0 and "generated" not in doc
    assert doc["tables"][0]["rows"][0]["dim"] == 147


def test_usage_error():
    assert cli.run(["dims", "--g", "two"], stream=io.StringIO()) == cli.EXIT_USAGE
    assert cli.run(["no-such-command"], stream=io.StringIO()) == cli.EXIT_USAGE


@pytest.mark.parametrize("argv", [
    ["dims", "--p", "9"],
    ["dims", "--p", "7", "--label", "3"],
    ["build-rep", "--spec", "Klein(2)", "--p", "7"],
    ["reduce", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--q", "7"],
    ["closure", "--sl2", "8"],
])
def test_config_errors(argv, capsys):
    assert cli.run(argv + ["--no-timestamp"], stream=io.StringIO()) == cli.EXIT_CONFIG
    assert "config error" in capsys.readouterr().err


def test_io_error(tmp_path):
    code = cli.run(["roundtrip", str(tmp_path / "missing.bundle")], stream=io.StringIO())
    assert code == cli.EXIT_IO


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# dims defaults\ng = 3\np = 7\nlabel = 4\nno-timestamp = yes\n")
    code, out = call("dims", "--config", str(cfg))
    assert code == 0 and rows(out)[0]["dim"] == "147"
    code, out = call("dims", "--config", str(cfg), "--g", "2")
    assert rows(out)[0]["dim"] == "14"
    cfg.write_text("bogus = 1\n")
    assert call("dims", "--config", str(cfg))[0] == cli.EXIT_CONFIG
    cfg.write_text("just words\n")
    assert call("dims", "--config", str(cfg))[0] == cli.EXIT_CONFIG
    assert call("dims", "--config", str(tmp_path / "nope.cfg"))[0] == cli.EXIT_IO


def test_build_rep_and_roundtrip(tmp_path):
    path = tmp_path / "thtorus.bundle"
    code, out = call("build-rep", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--file", str(path),
                     "--no-timestamp")
    assert code == 0 and rows(out)[0]["dim"] == "3"
    code, out = call("roundtrip", str(path), "--no-timestamp")
    assert code == 0 and rows(out)[0]["roundtrip"] == "pass"


def test_roundtrip_reports_offset(tmp_path, capsys):
    path = tmp_path / "thtorus.bundle"
    call("build-rep", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--file", str(path))
    text = path.read_text()
    pos = text.index("matrix\t")
    path.write_text(text[:pos] + "matrx" + text[pos + 6:])
    code, out = call("roundtrip", str(path), "--no-timestamp")
    assert code == cli.EXIT_FAIL
    assert f"byte offset {pos}" in rows(out)[0]["detail"]
    assert capsys.readouterr().err.startswith("FAIL\troundtrip")


def test_out_dir_env(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUT_ENV, str(tmp_path))
    code, _ = call("reduce", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--q", "29",
                   "--no-timestamp")
    assert code == 0
    (path,) = tmp_path.glob("*.residue")
    code, out = call("roundtrip", str(path), "--no-timestamp")
    assert code == 0 and rows(out)[0]["kind"] == "residue"


def test_dim_table_roundtrip(tmp_path):
    code, out = call("dims", "--g", "1", "2", "--p", "7", "--labels", "2,4", "--labels", "-",
                     "--no-timestamp")
    path = tmp_path / "dims.tsv"
    path.write_text(out)
    code, out = call("roundtrip", str(path), "--no-timestamp")
    assert code == 0 and rows(out)[0]["kind"] == "dim-table"


def test_unknown_file_type(tmp_path):
    path = tmp_path / "junk.txt"
    path.write_text("hello\n")
    code, out = call("roundtrip", str(path), "--no-timestamp")
    assert code == cli.EXIT_FAIL and "byte offset 0" in out


def test_closure_sl2():
    code, out = call("closure", "--sl2", "7", "--no-timestamp")
    row = rows(out)[0]
    assert code == 0 and row["order"] == "336" and row["time"] == "-"


def test_closure_cap_is_undecided():
    code, out = call("closure", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--q", "29",
                     "--cap", "1000", "--no-timestamp")
    row = rows(out)[0]
    assert row["status"] == "cap-exceeded" and row["order"] == "undecided"
    assert call("closure", "--sl2", "7", "--cap", "0")[0] == cli.EXIT_CONFIG


def test_check_rep_small():
    code, out = call("check-rep", "--spec", "OneHoledTorus(0)", "--p", "5", "--no-timestamp")
    assert code == 0 and "FAIL" not in out


def test_push_explore_word():
    code, out = call("push-explore", "--spec", "TwiceHoledTorus(2,4)", "--p", "7", "--word", "d.x",
                     "--max-len", "1", "--no-timestamp")
    assert code == 0
    assert any(r.get("verdict") == "infinite order" for r in rows(out))
