"""
End-to-end tests of the kblab command line.
"""

import json

from kblab.atlas.canonical import are_isomorphic
from kblab.atlas.generate import clear_generation_cache
from kblab.cli import run
from kblab.core.formats import parse_graph6, to_edge_list, to_graph6
from kblab.core.graph import circulant, complete, crown, cycle, from_edge_list, path

FAMILY2_HOST = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_bicliques_text(capsys):
    assert run(["bicliques", "--g6", to_graph6(cycle(4))]) == 0
    assert capsys.readouterr().out.strip() == "0 2 | 1 3"


def test_bicliques_oracle_json(capsys):
    assert run(["bicliques", "--g6", to_graph6(path(3)), "--oracle", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == [{"left": [0, 2], "right": [1]}]


def test_kb_json(capsys):
    assert run(["kb", "--g6", to_graph6(cycle(7)), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 7
    assert are_isomorphic(parse_graph6(payload["graph6"]), circulant(7, (1, 2)))
    assert len(payload["bicliques"]) == 7


def test_twins_json(capsys):
    assert run(["twins", to_graph6(cycle(4)), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classes"] == [[0, 2], [1, 3]]
    assert payload["reduced"] == to_graph6(complete(2))


def test_check_p3_exit_codes(capsys):
    assert run(["check-p3", "--g6", "Bw"]) == 0
    assert capsys.readouterr().out.strip() == "pass"
    assert run(["check-p3", "--g6", to_graph6(cycle(4))]) == 1
    out = capsys.readouterr().out
    assert out.startswith("fail")
    assert "witness: 0 1 2" in out


def test_remove_deg2_from_edge_list_file(tmp_path, capsys):
    source = tmp_path / "host.txt"
    source.write_text(to_edge_list(FAMILY2_HOST))
    assert run(["remove-deg2", "--in", str(source), "--kb-vertex", "0", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verified"] is True
    assert payload["plan"] == {"family": 2, "a": 0, "b": 1, "c": 2}
    assert payload["construction"] == "family"
    assert payload["diagnostic"] is None


def test_remove_deg2_rejects_wrong_degree(capsys):
    assert run(["remove-deg2", "--g6", to_graph6(FAMILY2_HOST), "--kb-vertex", "2"]) == 2
    assert "ERROR" in capsys.readouterr().err


def test_analyze_verdicts(capsys):
    assert run(["analyze", "--g6", "Bw", "--max-n", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "is-biclique"
    assert run(["analyze", "--g6", to_graph6(cycle(5)), "--max-n", "4"]) == 1
    capsys.readouterr()
    assert run(["analyze", "--g6", to_graph6(crown()), "--max-n", "6"]) == 3
    assert json.loads(capsys.readouterr().out)["verdict"] == "inconclusive"


def test_preimage(capsys):
    assert run(["preimage", "--g6", to_graph6(complete(2)), "--max-n", "5"]) == 0
    assert are_isomorphic(parse_graph6(capsys.readouterr().out.strip()), path(4))
    assert run(["preimage", "--g6", to_graph6(cycle(4)), "--max-n", "5"]) == 3
    assert run(["preimage", "--g6", "Bw", "--max-n", "9"]) == 2


def test_gen(tmp_path, capsys):
    assert run(["gen", "--n", "4"]) == 0
    assert len(capsys.readouterr().out.split()) == 6
    assert run(["gen", "--n", "5", "--twin-free", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["count"] == 11
    out = tmp_path / "five.g6"
    assert run(["gen", "--n", "5", "--out", str(out)]) == 0
    assert len(out.read_text().split()) == 21
    assert run(["gen", "--n", "9"]) == 2


def test_verify_writes_reports(tmp_path, capsys):
    assert run(["verify", "observation1", "--k-min", "7", "--k-max", "7", "--out", str(tmp_path)]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["counts"]["removals"] == 7
    assert (tmp_path / "observation1.json").exists()
    assert (tmp_path / "observation1.parquet").exists()
    assert "observation1" in (tmp_path / "README.md").read_text()


def test_verify_base_case_without_writing(tmp_path, capsys):
    assert run(["verify", "lemma1", "--n", "6", "--no-write", "--out", str(tmp_path)]) == 0
    assert json.loads(capsys.readouterr().out)["counts"]["exceptional_graphs"] == 3
    assert not list(tmp_path.iterdir())


def test_conjecture2_small(tmp_path, capsys):
    assert run(["conjecture", "2", "--k-max", "7", "--max-n", "5", "--out", str(tmp_path)]) == 0
    assert json.loads(capsys.readouterr().out)["counts"]["inconsistent"] == 0



def test_sweeps_accept_jobs_and_store(tmp_path, capsys):
    clear_generation_cache()
    db = tmp_path / "atlas.db"
    reports = tmp_path / "reports"
    assert run(["conjecture", "3", "--max-n", "5", "--jobs", "2", "--store", str(db),
                "--no-write", "--out", str(reports)]) == 0
    assert db.exists()
    assert not reports.exists()
    capsys.readouterr()
    assert run(["verify", "lemma1", "--n", "6", "--store", str(db), "--no-write"]) == 0
    assert json.loads(capsys.readouterr().out)["counts"]["exceptional_graphs"] == 3
    assert run(["preimage", "--g6", to_graph6(complete(2)), "--max-n", "5", "--store", str(db)]) == 0
    assert are_isomorphic(parse_graph6(capsys.readouterr().out.strip()), path(4))
    assert run(["analyze", "--g6", "Bw", "--max-n", "4", "--store", str(db)]) == 0


def test_draw(tmp_path):
    out = tmp_path / "c5.png"
    assert run(["draw", "--g6", to_graph6(cycle(5)), "--p3", "--out", str(out)]) == 0
    assert out.exists()


def test_usage_errors(capsys):
    assert run(["kb"]) == 2
    assert run(["kb", "--g6", "A`"]) == 2
    assert run(["kb", "--g6", "Bw", "--in", "x.g6"]) == 2
    assert run(["no-such-command"]) == 2
    assert run(["--help"]) == 0
    capsys.readouterr()
