import io
import json
import re
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from halvgraph.chains import decompose_chains
from halvgraph.cli import run
from halvgraph.constructions import convex_polygon, path_construction
from halvgraph.halving import underlying_geograph
from halvgraph.pointsfile import read_points
from halvgraph.render import RenderSpec, chain_widths, fmt, render_svg

GOLDEN = Path(__file__).parent / "golden"
SVG = "{http://www.w3.org/2000/svg}"


def _run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_analyze_polygon(tmp_path, capsys):
    f = tmp_path / "p.txt"
    assert _run(capsys, "gen", "polygon", "--n", "10", "-o", str(f))[0] == 0
    code, out, _ = _run(capsys, "analyze", str(f), "--json")
    assert code == 0 and json.loads(out)["E"] == 5
    assert (tmp_path / "p.txt.cert.json").exists()


def test_gen_round_trip(tmp_path, capsys):
    f = tmp_path / "c.txt"
    run(["gen", "clique", "--k", "4", "-o", str(f)])
    from halvgraph.constructions import clique_construction

    assert read_points(f) == clique_construction(4)[0]


def test_star_pipe_verify(capsys, monkeypatch):
    _, text, _ = _run(capsys, "gen", "star", "--n", "10")
    code, out, _ = _run(capsys, "verify", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and "0 failed" in out


def test_malformed_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("4\n0 0\n1 one\n")
    code, out, err = _run(capsys, "analyze", str(f))
    assert code == 2 and err.startswith("error:") and out == ""


@pytest.mark.parametrize("argv", [["gen", "polygon", "--n", "7"], ["gen", "clique"], ["nonsense"],
                                  ["gen", "induced", "--graph", "3:0-5"], ["analyze", "/no/such/file"]])
def test_invalid_input(capsys, argv):
    assert run(argv) == 2


def test_verify_failure_exit_1(tmp_path, capsys):
    f = tmp_path / "s.txt"
    run(["gen", "star", "--n", "6", "-o", str(f)])
    cert = json.loads((tmp_path / "s.txt.cert.json").read_text())
    cert["edge_count"] = 4
    (tmp_path / "s.txt.cert.json").write_text(json.dumps(cert))
    code, out, _ = _run(capsys, "verify", str(f))
    assert code == 1 and "FAIL certificate" in out


def test_up_direction_genericized(tmp_path, capsys):
    f = tmp_path / "q.txt"
    f.write_text("4\n0 0\n4 0\n4 4\n0 4\n")
    code, out, err = _run(capsys, "chains", str(f), "--up", "0,1", "--json")
    assert code == 0 and "notice" in err
    data = json.loads(out)
    assert len(data["chains"]) == 2 and data["charging_violations"] == []


@pytest.mark.parametrize(
    "argv,golden",
    [(["gen", "polygon", "--n", "6"], "analyze_polygon6.json"), (["gen", "star", "--n", "6"], "span_star6.json"),
     (["gen", "star", "--n", "6"], "verify_star6.json")],
)
def test_golden(tmp_path, capsys, argv, golden):
    f = tmp_path / "x.txt"
    run(argv + ["-o", str(f)])
    cmd = golden.split("_")[0]
    capsys.readouterr()
    run([cmd, str(f), "--json"])
    got = json.loads(capsys.readouterr().out)
    assert got == json.loads((GOLDEN / golden).read_text())


def test_search_cli(capsys):
    code, out, _ = _run(capsys, "search", "--n", "4", "--grid", "3", "--exhaustive", "--json")
    assert code == 0 and json.loads(out)["best"] == 3


def test_interpolate_cli(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(["gen", "polygon", "--n", "6", "-o", str(a)])
    run(["gen", "star", "--n", "6", "-o", str(b)])
    capsys.readouterr()
    code, out, _ = _run(capsys, "interpolate", str(a), str(b), "--json")
    assert code == 0 and {3, 4, 5} <= set(json.loads(out)["counts"])


# -- rendering --------------------------------------------------------------


def test_render_polygon_counts():
    svg = render_svg(convex_polygon(6))
    root = ET.fromstring(svg.encode())
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    assert len(root.findall(f".//{SVG}circle")) == 6
    assert len(root.findall(f".//{SVG}line")) == 3


def test_render_chains_and_determinism():
    cfg, _ = path_construction(8)
    d = decompose_chains(underlying_geograph(cfg))
    a = render_svg(cfg, d)
    assert a == render_svg(cfg, d)
    root = ET.fromstring(a.encode())
    lines = root.findall(f".//{SVG}polyline")
    assert len(lines) == 4
    widths = [float(p.get("stroke-width")) for p in lines]
    assert widths == sorted(widths, reverse=True) and len(set(widths)) == 4


def test_render_numbers_have_six_decimals():
    svg = render_svg(convex_polygon(4), spec=RenderSpec(labels=True))
    for num in re.findall(r'c[xy]="([^"]+)"', svg):
        assert re.fullmatch(r"-?\d+\.\d{6}", num)


def test_fmt_half_even():
    from fractions import Fraction

    assert fmt(Fraction(1, 2_000_000)) == "0.000000"
    assert fmt(Fraction(3, 2_000_000)) == "0.000002"
    assert fmt(Fraction(-1, 3)) == "-0.333333"


def test_chain_widths():
    assert chain_widths(1, RenderSpec()) == [6]
    assert chain_widths(3, RenderSpec()) == [6, 3.5, 1]


def test_render_cli_file(tmp_path, capsys):
    f, out = tmp_path / "p.txt", tmp_path / "p.svg"
    run(["gen", "path", "--n", "8", "-o", str(f)])
    assert run(["render", str(f), "--chains", "-o", str(out)]) == 0
    assert out.read_text().count("<polyline") == 4
