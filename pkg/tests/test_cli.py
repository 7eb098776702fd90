import json
from importlib import resources

import jsonschema
import pytest

from isk4lab.cli import main
from isk4lab.formats import encode_graph6
from isk4lab.graph import complete_bipartite, cycle, path, petersen

SCHEMA = json.loads(resources.files("isk4lab").joinpath("schema/report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return code, payload


@pytest.fixture
def files(tmp_path):
    k33 = tmp_path / "k33.g6"
    k33.write_text(encode_graph6(complete_bipartite(3, 3)) + "\n")
    pet = tmp_path / "petersen.g6"
    pet.write_text(encode_graph6(petersen()) + "\n")
    many = tmp_path / "many.g6"
    many.write_text("".join(encode_graph6(g) + "\n" for g in (cycle(5), path(4), cycle(8))))
    edges = tmp_path / "p4.txt"
    edges.write_text("n 4\n0 1\n1 2\n2 3\n")
    bad = tmp_path / "bad.g6"
    bad.write_text("D???\n")
    return {"k33": str(k33), "petersen": str(pet), "many": str(many), "edges": str(edges), "bad": str(bad)}


def test_decompose_k33(capsys, files):
    code, payload = run_json(capsys, "decompose", files["k33"])
    assert code == 0 and payload["results"][0]["outcome"] == "complete_bipartite"


def test_color_petersen_out_of_class(capsys, files):
    code, payload = run_json(capsys, "color", files["petersen"])
    res = payload["results"][0]
    assert code == 1 and res["status"] == "out_of_class" and "ISK4" in res["reason"]
    assert len(res["witness"]["branch_vertices"]) == 4


def test_color_many(capsys, files):
    code, payload = run_json(capsys, "color", files["many"])
    assert code == 0 and [r["status"] for r in payload["results"]] == ["ok"] * 3


def test_analyze_edgelist(capsys, files):
    code, payload = run_json(capsys, "analyze", files["edges"])
    res = payload["results"][0]
    assert code == 0 and res["n"] == 4 and res["witnesses"]["isk4"] is None


def test_text_and_json_agree(capsys, files):
    _, payload = run_json(capsys, "decompose", files["many"])
    code, text, _ = run(capsys, "decompose", files["many"])
    assert code == 0
    for i, r in enumerate(payload["results"]):
        assert f'results[{i}].outcome: "{r["outcome"]}"' in text


def test_verify_and_hunt(capsys):
    code, payload = run_json(capsys, "verify", "lemma_ca", "--n", "6")
    assert code == 0 and payload["violations"] == [] and "wall_time" not in payload
    code, payload = run_json(capsys, "hunt", "conj1", "--n", "3", "--timing")
    assert code == 0 and payload["graphs_scanned"] == 6 and "wall_time" in payload


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "5", "--filter", "triangle_free", "--filter", "connected")
    assert code == 0 and len(out.split()) == 6
    code, payload = run_json(capsys, "gen", "--n", "4")
    assert len(payload["graphs"]) == 11


def test_usage_and_io_errors(capsys, files):
    assert run(capsys, "decompose", "/nonexistent/file.g6")[0] == 2
    code, _, err = run(capsys, "analyze", files["bad"])
    assert code == 2 and "bad.g6:1" in err
    assert run(capsys, "verify", "no_such_suite")[0] == 2
    assert run(capsys, "gen", "--n", "12")[0] == 2
    assert run(capsys)[0] == 2


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0
