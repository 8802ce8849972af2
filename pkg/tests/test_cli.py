import json

import pytest

from hkmonoid.cli import catalan_rows, main

A2 = "vertices 2\n1 -> 2\n"
A2U = "vertices 2\n1 -- 2\n"
TRIANGLE = "vertices 3\n1 -- 2\n2 -- 3\n1 -- 3\n"


@pytest.fixture
def graph_file(tmp_path):
    def make(text, name="g.g"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def test_info_oriented(graph_file, capsys):
    assert main(["info", graph_file(A2)]) == 0
    out = capsys.readouterr().out
    assert "size: 5" in out and "idempotents: 4" in out and "j_trivial: true" in out


def test_info_unoriented_both_engines(graph_file, capsys):
    path = graph_file(A2U)
    for engine in ("rewrite", "hecke-a"):
        assert main(["info", path, "--engine", engine]) == 0
        out = capsys.readouterr().out
        assert "size: 6" in out and "idempotents: 4" in out


def test_info_json(graph_file, capsys):
    assert main(["info", graph_file(A2), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["size"] == 5 and data["irreducible_generators"] == ["1", "2"]


def test_info_parse_error(graph_file, capsys):
    assert main(["info", graph_file("vertices 2\n1 => 2\n")]) == 2
    assert "line 2" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["info", "/nonexistent/graph.g"]) == 2


def test_engine_mismatch(graph_file, capsys):
    assert main(["info", graph_file(TRIANGLE), "--engine", "hecke-a"]) == 2
    assert "engine mismatch" in capsys.readouterr().err


def test_infinite_graph(graph_file, capsys):
    path = graph_file(TRIANGLE)
    assert main(["info", path]) == 0
    assert "status: Infinite" in capsys.readouterr().out
    assert main(["enumerate", path, "--max-elements", "20"]) == 1
    assert "(partial)" in capsys.readouterr().out


def test_cross_check(graph_file, capsys):
    assert main(["info", graph_file("vertices 3\n1 -> 2\n3 -> 2\n"), "--cross-check"]) == 0
    assert "agree" in capsys.readouterr().out


def test_enumerate_formats(graph_file, tmp_path, capsys):
    path = graph_file(A2)
    assert main(["enumerate", path, "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["elements"] == ["", "1", "2", "12", "21"]
    assert main(["enumerate", path, "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")
    out = tmp_path / "table.csv"
    assert main(["enumerate", path, "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "*,e,1,2,12,21"


def test_json_graph_input(graph_file, capsys):
    text = json.dumps({"n": 2, "edges": [{"a": 1, "b": 2, "kind": "fwd"}]})
    assert main(["info", graph_file(text, "g.json")]) == 0
    assert "size: 5" in capsys.readouterr().out


def test_rep(graph_file, capsys):
    path = graph_file("vertices 3\n2 -> 1\n3 -> 2\n")
    for kind in ("transformation", "matrix", "boolean"):
        assert main(["rep", path, "--kind", kind]) == 0
        out = capsys.readouterr().out
        assert "faithful: true" in out and "image_size: 14" in out
    assert main(["rep", path, "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["monoid_size"] == 14
    assert main(["rep", path, "--format", "dot"]) == 0
    assert "digraph action" in capsys.readouterr().out
    assert main(["rep", graph_file(A2U)]) == 2


def test_classify(capsys, tmp_path):
    assert main(["classify", "2"]) == 0
    out = capsys.readouterr().out
    assert "graph classes: 3" in out and "monoid classes: 3" in out
    target = tmp_path / "c3.json"
    assert main(["classify", "3", "--format", "json", "--out", str(target)]) == 0
    data = json.loads(target.read_text())
    assert data["iso_matches"] and data["anti_matches"] and len(data["classes"]) == 16
    assert (tmp_path / "c3.png").exists()
    assert main(["classify", "5"]) == 2


def test_verify(capsys):
    assert main(["verify", "thm1.vii", "--n", "4"]) == 0
    assert "PASS" in capsys.readouterr().out
    assert main(["verify", "prop32", "--n", "5", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)[0]["outcome"] == "pass"
    assert main(["verify", "nope"]) == 2
    assert main(["verify", "thm1.vi", "--n", "x"]) == 2


def test_catalan_csv_and_figure(tmp_path, capsys):
    out = tmp_path / "cat.csv"
    assert main(["catalan", "5", "--format", "csv", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,catalan,avoiders,strongly_special_classes,special_words,hk_size"
    assert lines[3] == "3,14,14,14,18,14"
    assert (tmp_path / "cat.png").stat().st_size > 0


def test_catalan_rows():
    rows = catalan_rows(4)
    assert [r["special_words"] for r in rows] == [2, 5, 18, 115]
    assert all(r["hk_size"] == r["catalan"] == r["avoiders"] for r in rows)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        main(["info"])
    assert e.value.code == 2
