import json
import math
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from smallgon.cli import fmt, main, table1_rows
from smallgon.families import f8, g_family
from smallgon.geometry import polygon_from_json, width


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_f8_json_round_trip(tmp_path, capsys):
    path = tmp_path / "f8.json"
    code, _, _ = run(capsys, "construct", "f8", "--format", "json", "--out", str(path))
    assert code == 0
    text = path.read_text()
    p = polygon_from_json(text)
    ref = f8()[0]
    assert max(abs(a - b) for u, v in zip(p.vertices, ref.vertices) for a, b in zip(u, v)) <= 1e-15
    assert json.loads(text)["width"] == pytest.approx(width(ref), abs=1e-14)
    assert width(p) == pytest.approx(width(ref), abs=1e-14)


def test_construct_reuleaux_width_field(capsys):
    code, out, _ = run(capsys, "construct", "reuleaux", "--m", "3", "--n", "6")
    assert code == 0
    assert json.loads(out)["width"] == pytest.approx(math.cos(math.pi / 12), abs=1e-12)
    assert json.loads(out)["width"] == pytest.approx(0.9659258263, abs=1e-10)


def test_construct_gn_tikz_edge_classes(capsys):
    code, out, _ = run(capsys, "construct", "gn", "--n", "16", "--format", "tikz")
    assert code == 0
    assert "scale=4" in out
    assert out.count(r"\draw[dashed]") == 16
    # unit diagonals of G16: one per cycle edge of the height graph at distance 1
    p = g_family(16)[0]
    V = p.vertices
    unit = sum(
        1 for i in range(16) for j in range(i + 2, 16)
        if not (i == 0 and j == 15) and abs(math.dist(V[i], V[j]) - 1) < 1e-9
    )
    assert out.count(r"\draw[solid]") == unit
    assert r"\draw[dotted]" in out


def test_construct_svg_is_valid_xml(tmp_path, capsys):
    path = tmp_path / "h8.svg"
    assert run(capsys, "construct", "fixture", "--name", "B8", "--format", "svg", "-o", str(path))[0] == 0
    root = ET.fromstring(path.read_text())
    lines = [el for el in root.iter() if el.tag.endswith("line")]
    assert sum(1 for el in lines if el.get("class") == "side") == 8
    # unit diameter maps to 400 px
    assert float(root.get("width")) == pytest.approx(400 * (1.0 + 0.1), abs=1)


def test_construct_missing_parameter(capsys):
    code, _, err = run(capsys, "construct", "gn")
    assert code == 2 and "n" in err


def test_construct_invalid_parameter(capsys):
    code, _, _ = run(capsys, "construct", "gn", "--n", "12")
    assert code == 2


def test_width_command(tmp_path, capsys):
    path = tmp_path / "f8.json"
    run(capsys, "construct", "f8", "-o", str(path))
    code, out, _ = run(capsys, "width", str(path))
    assert code == 0
    assert "width          0.9537763006" in out
    assert "is_equilateral true" in out


def test_width_q4(tmp_path, capsys):
    path = tmp_path / "q4.json"
    run(capsys, "construct", "fixture", "--name", "Q4", "-o", str(path))
    code, out, _ = run(capsys, "width", str(path))
    assert code == 0
    w = float(out.split()[1])
    assert w == pytest.approx(0.8660254, abs=1e-4)


def test_width_malformed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x",\n "n": 3\n "vertices": []}')
    code, _, err = run(capsys, "width", str(path))
    assert code == 2
    assert "line 3" in err


def test_width_missing_file(tmp_path, capsys):
    assert run(capsys, "width", str(tmp_path / "nope.json"))[0] == 2


def test_table1_rows_published():
    rows = {r[0]: r for r in table1_rows()}
    assert [fmt(v) for v in rows[32][1:5]] == ["0.9951847267", "0.9983271244", "0.9987316811", "0.9987954562"]
    assert fmt(rows[32][5], 4) == "0.9823"
    assert rows[128][3] == pytest.approx(0.9999244595, abs=1e-10)
    assert rows[16][5] == pytest.approx(0.9224, abs=5e-5)


def test_table1_csv_deterministic(capsys):
    _, a, _ = run(capsys, "table1", "--format", "csv")
    _, b, _ = run(capsys, "table1", "--format", "csv")
    assert a == b
    lines = a.strip().splitlines()
    assert lines[0] == "n,W(R_n),W(F_n),W(G_n),W_hat_n,fraction"
    assert lines[2] == "32,0.9951847267,0.9983271244,0.9987316811,0.9987954562,0.9823"
    assert len(lines) == 6


def test_table1_text(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert "0.9999811602" in out


def test_fmt_round_half_even():
    assert fmt(0.125, 2) == "0.12"
    assert fmt(0.375, 2) == "0.38"


def test_verify_bounds_reports_the_diagonal_failure(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bounds")
    assert code == 1
    assert "FAIL  tight diagonal upper" in out
    assert out.count("FAIL") == 1


def test_verify_lemmas(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemmas", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and report["seed"] == 7


def test_verify_search_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "search", "--seed", "7", "--starts", "8", "--json")
    report = json.loads(out)
    assert code == 0 and report["passed"]


def test_verify_uniqueness_small(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "uniqueness", "--samples", "200")
    assert code == 0


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("SMALLGON_SEED", "123")
    _, out, _ = run(capsys, "verify", "--suite", "lemmas", "--json")
    assert json.loads(out)["seed"] == 123
    _, out, _ = run(capsys, "verify", "--suite", "lemmas", "--json", "--seed", "4")
    assert json.loads(out)["seed"] == 4


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "everything"])
    assert exc.value.code == 2


def test_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "--n", "256")
    assert code == 0
    row = out.splitlines()[1].split()
    assert float(row[3]) == pytest.approx(2 * math.pi**4 / 3, rel=0.01)
    assert float(row[4]) == pytest.approx(math.pi**3 / 2, rel=0.01)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "smallgon.cli", "table1", "--format", "csv"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.startswith("n,")
