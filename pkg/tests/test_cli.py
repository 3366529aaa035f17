import json

import pytest

from npcaudit.cli import main
from npcaudit.complex import ComplexError, from_facets
from npcaudit.generators import counterexample, cycle, octahedron, tetra_fan
from npcaudit.io import dump_complex, dumps_complex, load_complex, loads_complex
from npcaudit.polygons import is_empty_ngon


@pytest.fixture
def write(tmp_path):
    def _write(K, name="k.json"):
        path = tmp_path / name
        dump_complex(K, path)
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


# io --------------------------------------------------------------------------------


def test_writer_is_byte_stable():
    a = from_facets([[2, 1, 0], [3, 2], [0, 1]])
    b = from_facets([[2, 3], [0, 1, 2]])
    assert dumps_complex(a) == dumps_complex(b) == '{"facets": [[0, 1, 2], [2, 3]]}\n'
    assert loads_complex(dumps_complex(a)) == a


def test_named_round_trip(tmp_path):
    path = tmp_path / "c.json"
    dump_complex(counterexample(4), path)
    K = load_complex(path)
    assert K == counterexample(4) and K.name == "counterexample-4"


@pytest.mark.parametrize(
    "text", ["not json", "[]", '{"faces": []}', '{"facets": [[0, -1]]}', '{"facets": [1, 2]}', '{"name": 3, "facets": []}']
)
def test_loader_rejects_malformed(text):
    with pytest.raises(ComplexError):
        loads_complex(text)


# audit -----------------------------------------------------------------------------


def test_audit_edge_links_pass(capsys, write):
    code, out, _ = run(capsys, "audit", write(counterexample(4)), "--edge-links")
    assert code == 0
    assert "PASS edge-links" in out and "6.590580" in out


def test_audit_snpc_fails_with_sigma(capsys, write):
    code, rep = run_json(capsys, "audit", write(counterexample(4)), "--snpc")
    assert code == 1
    [c] = rep["checks"]
    assert c["id"] == "snpc" and c["pass"] is False
    assert c["witness"]["simplex"] == [0, 1, 2]
    assert c["witness"]["link"]["check"] == "empty-ngon"
    assert c["witness"]["link"]["loop"] == [3, 4, 5, 6, 7]


def test_audit_k_large_cycle(capsys, write):
    code, rep = run_json(capsys, "audit", write(cycle(6)), "--k-large", "6")
    assert code == 0 and rep["checks"][0]["pass"]


def test_audit_default_checks_and_order(capsys, write):
    code, rep = run_json(capsys, "audit", write(octahedron()))
    assert code == 1
    assert [c["id"] for c in rep["checks"]] == ["flag", "empty-gons", "snpc", "edge-links"]
    gons = rep["checks"][1]["witness"]
    assert gons[0] == {
        "check": "empty-ngon",
        "n": 4,
        "loop": [0, 2, 1, 3],
        "missing": [{"diagonals": [[0, 1]], "triangles": [[0, 1, 2], [0, 1, 3]]},
                    {"diagonals": [[2, 3]], "triangles": [[0, 2, 3], [1, 2, 3]]}],
    }


def test_audit_all_flags_fixed_order(capsys, write):
    K = cycle(6)
    code, rep = run_json(
        capsys, "audit", write(K), "--full", write(K, "amb.json"), "--edge-links", "--snpc",
        "--k-large", "6", "--empty-gons", "--flag",
    )
    assert code == 0
    assert [c["id"] for c in rep["checks"]] == ["flag", "empty-gons", "k-large", "snpc", "edge-links", "full"]


def test_audit_full_failure(capsys, write):
    hollow = from_facets([[0, 1], [1, 2], [0, 2]])
    code, rep = run_json(capsys, "audit", write(hollow), "--full", write(from_facets([[0, 1, 2]]), "amb.json"))
    assert code == 1 and rep["checks"][0]["witness"] == {"simplex": [0, 1, 2]}


def test_audit_report_is_deterministic(capsys, write):
    path = write(counterexample(5))
    _, a, _ = run(capsys, "audit", path, "--format", "json")
    _, b, _ = run(capsys, "audit", path, "--format", "json")
    assert a == b


def test_witness_round_trip(capsys, write):
    K = octahedron()
    path = write(K)
    _, rep = run_json(capsys, "audit", path, "--empty-gons")
    for w in rep["checks"][0]["witness"]:
        assert is_empty_ngon(K, tuple(w["loop"]))[0]
        code, disk = run_json(capsys, "disk", path, "--loop", ",".join(map(str, w["loop"])), "--max-interior", "0")
        assert code == 1 and disk["status"] == "exhausted"


def test_audit_mixed_codimension_is_an_input_error(capsys, write):
    code, _, err = run(capsys, "audit", write(from_facets([[0, 1, 2, 3], [0, 1, 4]])), "--edge-links")
    assert code == 2 and "codimension" in err


@pytest.mark.parametrize("text", ["{", '{"facets": [[0, 0]]}', '{"facets": "x"}'])
def test_audit_malformed_input(capsys, tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    code, _, err = run(capsys, "audit", str(p))
    assert code == 2 and err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "audit", str(tmp_path / "nope.json"))[0] == 2


def test_thread_variable(capsys, write, monkeypatch):
    path = write(cycle(6))
    monkeypatch.setenv("NPC_AUDIT_THREADS", "4")
    assert run(capsys, "audit", path, "--flag")[0] == 0
    for bad in ("many", "-1"):
        monkeypatch.setenv("NPC_AUDIT_THREADS", bad)
        assert run(capsys, "audit", path, "--flag")[0] == 2


# link ------------------------------------------------------------------------------


def test_link_of_vertex(capsys, write, tetrahedron):
    code, out, _ = run(capsys, "link", write(tetrahedron), "--simplex", "0")
    assert code == 0 and "[[1, 2, 3]]" in out


def test_link_metric_counterexample(capsys, write):
    code, out, _ = run(capsys, "link", write(counterexample(4)), "--simplex", "0,1,2", "--metric")
    assert code == 0
    assert "1.318116" in out and "girth: 6.590580" in out and "pass" in out


def test_link_metric_tetra_fan(capsys, write):
    code, rep = run_json(capsys, "link", write(tetra_fan(3)), "--simplex", "0,1", "--metric")
    assert code == 1
    assert rep["link"]["facets"] == [[2, 3], [2, 4], [3, 4]]
    assert abs(rep["metric"]["girth"] - 3.692878) < 1e-6 and rep["metric"]["pass"] is False


def test_link_errors(capsys, write):
    path = write(octahedron())
    assert run(capsys, "link", path, "--simplex", "0,1")[0] == 2
    assert run(capsys, "link", path, "--simplex", "a,b")[0] == 2
    assert run(capsys, "link", path, "--simplex", "", "--metric")[0] == 2


# disk ------------------------------------------------------------------------------


def test_disk_counterexample(capsys, write):
    code, rep = run_json(capsys, "disk", write(counterexample(4)), "--loop", "3,4,5,6,7")
    assert code == 0 and rep["status"] == "found" and rep["area"] == 5
    assert len(rep["disks"]) == 3
    for d in rep["disks"]:
        assert d["gauss_bonnet_total"] == 6 and d["cat0"] is False
        assert d["boundary_curvature"] == 5
        assert [d["map"][str(j)] for j in range(5)] == [3, 4, 5, 6, 7]


def test_disk_text_output(capsys, write, tetrahedron):
    code, out, _ = run(capsys, "disk", write(tetrahedron), "--loop", "0,1,2")
    assert code == 0 and "area 1, 1 disk(s)" in out and "gauss-bonnet 6" in out


def test_disk_octahedron(capsys, write):
    code, rep = run_json(capsys, "disk", write(octahedron()), "--loop", "0,2,1,3", "--max-interior", "1")
    assert code == 0 and rep["area"] == 4
    assert all(d["cat0"] is False for d in rep["disks"])


def test_disk_not_found_and_errors(capsys, write):
    path = write(cycle(5))
    code, out, _ = run(capsys, "disk", path, "--loop", "0,1,2,3,4")
    assert code == 1 and "not found within bounds" in out
    assert run(capsys, "disk", path, "--loop", "0,2,4")[0] == 2
    assert run(capsys, "disk", path, "--loop", "0,1")[0] == 2


# gen / distance --------------------------------------------------------------------


def test_gen_to_file(capsys, tmp_path):
    out = tmp_path / "ce.json"
    code, text, _ = run(capsys, "gen", "counterexample", "--n", "4", "-o", str(out))
    assert code == 0 and "5 facets, 8 vertices" in text
    assert load_complex(out) == counterexample(4)


def test_gen_stdout(capsys):
    code, text, err = run(capsys, "gen", "cycle", "--n", "6")
    assert code == 0 and loads_complex(text) == cycle(6) and "6 facets" in err
    code, text, _ = run(capsys, "gen", "tetra-fan", "--k", "6")
    assert len(loads_complex(text).facets) == 6
    code, a, _ = run(capsys, "gen", "random-flag", "--vertices", "8", "--p", "0.5", "--seed", "1")
    code, b, _ = run(capsys, "gen", "random-flag", "--vertices", "8", "--p", "0.5", "--seed", "1")
    assert a == b


def test_gen_bad_params(capsys):
    assert run(capsys, "gen", "cycle")[0] == 2
    assert run(capsys, "gen", "cycle", "--n", "2")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["gen", "hypercube"])
    assert e.value.code == 2


def test_distance(capsys, write):
    assert run(capsys, "distance", write(cycle(5)), "--from", "0", "--to", "2")[:2] == (0, "2\n")
    assert run(capsys, "distance", write(counterexample(4)), "--from", "0", "--to", "5")[:2] == (0, "1\n")
    two = write(from_facets([[0, 1], [2, 3]]), "two.json")
    assert run(capsys, "distance", two, "--from", "0", "--to", "3")[:2] == (1, "unreachable\n")
    assert run(capsys, "distance", two, "--from", "0", "--to", "9")[0] == 2
