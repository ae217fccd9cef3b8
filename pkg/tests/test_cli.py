from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import CORPUS, TREFOIL
from tanglekit import isomorphic, parse
from tanglekit.cli import main


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.pd"
    p.write_text(TREFOIL + "\n")
    return p


def test_check_text(trefoil_file, capsys):
    assert main(["check", str(trefoil_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("link: 3 crossing(s)")
    assert "certificate PrimeLink (Menasco (2))" in out


def test_check_json(trefoil_file, capsys):
    assert main(["check", str(trefoil_file), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["schema"] == "tanglekit.report/1"
    assert report["mode"] == "link" and report["crossings"] == 3
    assert report["state_circles"] == {"A": 3, "B": 2}


def test_check_graph_as_tangle(capsys):
    path = CORPUS / "split_local_knot.pd"
    assert main(["check", str(path), "--tangle", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["mode"] == "tangle"


def test_check_tangle_as_graph(tmp_path, capsys):
    p = tmp_path / "t.pd"
    p.write_text("tangle { ends(nw=1,ne=4,se=3,sw=2) X(1,2,3,4) }")
    assert main(["check", str(p), "--graph8", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["mode"] == "graph8"


def test_check_wrong_view(trefoil_file, capsys):
    assert main(["check", str(trefoil_file), "--tangle"]) == 2
    assert "cannot view" in capsys.readouterr().err


def test_check_parse_error(tmp_path, capsys):
    p = tmp_path / "bad.pd"
    p.write_text("link {\n X(1,2,3)\n}")
    assert main(["check", str(p)]) == 2
    err = capsys.readouterr().err
    assert "bad.pd: error:" in err and "line 2" in err


def test_check_missing_file(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.pd")]) == 2


def test_view_flags_exclusive(trefoil_file):
    with pytest.raises(SystemExit):
        main(["check", str(trefoil_file), "--tangle", "--graph8"])


def test_multivertex_needs_research(tmp_path, capsys):
    p = tmp_path / "two.pd"
    p.write_text("graph8 { V(1,2,2,1) V(3,3,4,4) }")
    assert main(["check", str(p)]) == 2
    capsys.readouterr()
    assert main(["check", str(p), "--research", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "UNCERTIFIED"
    assert all(not c["certified"] for c in report["certificates"])


def test_batch(tmp_path, capsys):
    (tmp_path / "a.pd").write_text(TREFOIL)
    (tmp_path / "b.pd").write_text("link { X(1,2,3) }")
    assert main(["batch", str(tmp_path)]) == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["diagrams"] == 2
    assert list(summary["failed"]) == ["b.pd"]
    assert summary["certificate_counts"]["PrimeLink"] == 1


def test_batch_parallel_matches_serial(capsys):
    assert main(["batch", str(CORPUS), "--research"]) == 0
    serial = json.loads(capsys.readouterr().out)
    assert main(["batch", str(CORPUS), "--research", "--jobs", "2"]) == 0
    assert json.loads(capsys.readouterr().out) == serial


def test_batch_not_a_directory(trefoil_file, capsys):
    assert main(["batch", str(trefoil_file)]) == 2


@pytest.mark.parametrize(
    "args, count",
    [
        (["torus2", "n=5"], 1),
        (["torus2", "4"], 1),
        (["pretzel", "2,3,4"], 1),
        (["pretzel", "p=2", "q=3", "r=5"], 1),
        (["alternating-tangle", "size=4", "--count", "3"], 3),
        (["positive-tangle", "size=5", "--seed", "9"], 1),
        (["local-knot", "knot=figure8", "variant=composite", "--count", "2"], 2),
    ],
)
def test_gen(tmp_path, capsys, args, count):
    out = tmp_path / "gen"
    assert main(["gen", *args, "-o", str(out)]) == 0
    files = sorted(out.glob("*.pd"))
    assert len(files) == count
    for f in files:
        parse(f.read_text())


def test_gen_torus_file_contents(tmp_path, capsys):
    from tanglekit.genlab import gen_torus2

    assert main(["gen", "torus2", "n=3", "-o", str(tmp_path)]) == 0
    assert isomorphic(parse((tmp_path / "torus2_n3.pd").read_text()), gen_torus2(3))


def test_gen_errors(tmp_path, capsys):
    assert main(["gen", "torus2", "-o", str(tmp_path)]) == 2
    assert main(["gen", "local-knot", "knot=unknot", "-o", str(tmp_path)]) == 2
    with pytest.raises(SystemExit):
        main(["gen", "dodecahedron", "-o", str(tmp_path)])


def test_gen_seed_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TANGLEKIT_SEED", "5")
    assert main(["gen", "alternating-tangle", "size=4", "-o", str(tmp_path / "a")]) == 0
    assert (tmp_path / "a" / "alternating-tangle_size4_seed5.pd").exists()


def test_module_entry_point(trefoil_file):
    res = subprocess.run([sys.executable, "-m", "tanglekit", "check", str(trefoil_file)],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "link: 3 crossing(s)" in res.stdout


def test_check_trefoil_json_certificates(capsys):
    assert main(["check", str(CORPUS / "trefoil.pd"), "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["alternating"] is True
    assert {"NonSplitLink", "NonTrivialLink", "PrimeLink"} <= {c["conclusion"] for c in report["certificates"]}


def test_check_positive_local_knot(capsys):
    path = str(CORPUS / "positive_local_knot.pd")
    assert main(["check", path, "--tangle", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["mof"] == "O"
    assert main(["check", path, "--json"]) == 0
    assert "LocalKnot" in {c["conclusion"] for c in json.loads(capsys.readouterr().out)["certificates"]}


def test_gen_torus_five(tmp_path, capsys):
    assert main(["gen", "torus2", "n=5", "-o", str(tmp_path)]) == 0
    assert parse((tmp_path / "torus2_n5.pd").read_text()).n_crossings == 5
