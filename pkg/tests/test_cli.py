import json
import subprocess
import sys

import pytest

from fanostab.cli import main, parse_rational
from fanostab.detect import is_fano_configuration
from fanostab.hypercore import bn, complete, ex_fano, generate, parse, serialize


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, H in (("fano", generate("fano")), ("bn24", bn(24)), ("k12", complete(12)), ("oct", generate("octahedron"))):
        p = tmp_path / f"{name}.txt"
        p.write_text(serialize(H))
        paths[name] = str(p)
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1 5\n")
    paths["bad"] = str(bad)
    return paths


def test_gen_bn(capsys):
    code, out, _ = run(["gen", "bn", "--n", "8"], capsys)
    assert code == 0
    assert len(parse(out).edges) == 48 == ex_fano(8)


def test_gen_random_is_seeded(capsys):
    a = run(["gen", "random", "--n", "9", "--p", "1/3", "--seed", "4"], capsys)[1]
    b = run(["gen", "random", "--n", "9", "--p", "1/3", "--seed", "4"], capsys)[1]
    c = run(["gen", "random", "--n", "9", "--p", "1/3", "--seed", "5"], capsys)[1]
    assert a == b != c


def test_gen_usage_errors(capsys):
    code, _, err = run(["gen", "bn", "--n", "2"], capsys)
    assert code == 2 and "fanostab: error" in err
    assert run(["gen", "random"], capsys)[0] == 2
    assert run(["gen", "random", "--n", "5", "--p", "3/2"], capsys)[0] == 2
    assert run(["gen", "petersen"], capsys)[0] == 2


def test_detect_fano(files, capsys):
    code, out, _ = run(["detect", "fano", files["fano"]], capsys)
    assert code == 1
    rec = json.loads(out)
    assert rec["found"] and len(rec["witness"]["edges"]) == 7
    assert is_fano_configuration(rec["witness"]["edges"])
    code, out, _ = run(["detect", "fano", files["bn24"]], capsys)
    assert code == 0 and json.loads(out) == {"found": False, "witness": None}


def test_detect_csv(files, capsys):
    code, out, _ = run(["detect", "fano", files["fano"], "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    assert code == 1 and lines[0] == "a,b,c" and len(lines) == 8


def test_malformed_input(files, capsys):
    code, _, err = run(["detect", "fano", files["bad"]], capsys)
    assert code == 2 and "vertex out of range, line 2" in err
    code, _, err = run(["detect", "fano", files["bad"] + ".missing"], capsys)
    assert code == 2 and "cannot read" in err


def test_count_octahedra(files, capsys):
    code, out, _ = run(["count", "octahedra", files["oct"]], capsys)
    assert code == 0 and json.loads(out)["octahedra"] == 1
    code, out, _ = run(["count", "octahedra", files["k12"], "--oracle"], capsys)
    rec = json.loads(out)
    assert rec["octahedra"] == 924 * 15 and rec["method"] == "oracle" and rec["boundHolds"]


def test_links(files, capsys):
    code, out, _ = run(["links", files["bn24"], "--apexes", "0,1,12,13"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["apexes"] == [0, 1, 12, 13]
    assert max(m for _, _, m in rec["G"]) == 4
    assert run(["links", files["bn24"], "--apexes", "0,1,2"], capsys)[0] == 2
    assert run(["links", files["bn24"], "--apexes", "0,1,2,99"], capsys)[0] == 2


def test_stability_partition(files, capsys):
    code, out, _ = run(["stability", files["bn24"], "--delta1", "0.2", "--mode", "relaxed",
                        "--drop-lower-order"], capsys)
    rec = json.loads(out)
    assert code == 0
    assert rec["A"] == list(range(12)) and rec["B"] == list(range(12, 24))
    assert rec["eA"] == rec["eB"] == 0 and rec["certificate"] is None
    assert rec["config"]["delta"] == "9/625"


def test_stability_certificates(files, capsys):
    code, out, _ = run(["stability", files["k12"], "--delta1", "1/5", "--mode", "relaxed",
                        "--drop-lower-order"], capsys)
    assert code == 1 and json.loads(out)["certificate"]["type"] == "fano"
    code, out, _ = run(["stability", files["bn24"], "--delta", "1/10000000000000"], capsys)
    cert = json.loads(out)["certificate"]
    assert code == 1 and cert["type"] == "violation"


def test_stability_usage(files, capsys):
    assert run(["stability", files["bn24"]], capsys)[0] == 2
    assert run(["stability", files["bn24"], "--delta", "1/2", "--delta1", "1/5"], capsys)[0] == 2
    code, _, err = run(["stability", files["bn24"], "--delta", "1/100"], capsys)
    assert code == 2 and "strict mode" in err
    assert run(["stability", files["bn24"], "--delta", "abc"], capsys)[0] == 2


def test_constants_verify(capsys):
    code, out, _ = run(["constants", "verify", "--format", "table"], capsys)
    assert code == 0
    assert "FINAL" in out and "certified = true" in out
    assert " false " not in out
    code, out, _ = run(["constants", "verify"], capsys)
    rec = json.loads(out)
    assert code == 0 and rec["certified"] and all(r["holds"] for r in rec["results"])
    code, out, _ = run(["constants", "verify", "--delta-max", "1/100", "--format", "csv"], capsys)
    assert code == 1 and out.startswith("id,holds,method")


def test_out_flag(files, tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(["count", "octahedra", files["oct"], "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["octahedra"] == 1


def test_reports_are_byte_identical(files, capsys):
    argv = ["stability", files["bn24"], "--delta1", "1/5", "--mode", "relaxed", "--drop-lower-order", "--seed", "3"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]
    argv = ["constants", "verify", "--format", "csv"]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_parse_rational_is_exact():
    from fractions import Fraction

    assert parse_rational("0.1") == Fraction(1, 10)
    assert parse_rational("3/7") == Fraction(3, 7)


def test_console_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "fanostab.cli", "gen", "fano"],
                         capture_output=True, text=True, check=True)
    assert parse(out.stdout) == generate("fano")
    bad = subprocess.run([sys.executable, "-m", "fanostab.cli", "nonsense"], capture_output=True, text=True)
    assert bad.returncode == 2
