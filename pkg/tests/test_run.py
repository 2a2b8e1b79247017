# SPDX-License-Identifier: BSD-3-Clause

"""
This module contains tests for the command-line entry point.
"""

import json

import pytest

import graph_factory
import hg_format
import regularity
import run

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def _json(capsys, argv):
    code = run.main(argv=["--format", "json"] + argv)

    return (code, json.loads(capsys.readouterr().out))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.fixture
def k6_file(tmp_path):
    path = str(tmp_path / "k6.h3")
    hg_format.write_h3(graph=graph_factory.gen_complete(n=6), path=path)

    return path

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.fixture
def empty_file(tmp_path):
    path = str(tmp_path / "empty.h3")
    hg_format.write_h3(graph=graph_factory.gen_random(n=6, p=0, seed=0), path=path)

    return path

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_gen_then_codegree(tmp_path, capsys):
    path = str(tmp_path / "host.h3")

    assert run.main(argv=["--out", path, "gen", "complete", "--n", "6"]) == run.EXIT_OK

    (code, payload) = _json(capsys=capsys, argv=["codegree", path])

    assert code == run.EXIT_OK
    assert payload == {"n": 6, "edges": 20, "min_codegree": 4, "min_degree": 10}

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_gen_writes_to_stdout(capsys):
    assert run.main(argv=["gen", "codegree", "--n", "8", "--target", "3"]) == run.EXIT_OK

    graph = hg_format.parse_h3(text=capsys.readouterr().out)

    assert graph.n == 8
    assert graph.min_codegree() >= 3

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_solve_found(k6_file, capsys):
    (code, payload) = _json(capsys=capsys, argv=["solve", k6_file, "--family", "6"])

    assert code == run.EXIT_OK
    assert payload["status"] == "found"
    assert sorted(payload["embedding"][0]) == list(range(6))

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_solve_exhausted(tmp_path, capsys):
    path = str(tmp_path / "extremal.h3")

    assert run.main(argv=["--out", path, "gen", "extremal", "--n", "6", "--family", "6"]) == 0

    (code, payload) = _json(capsys=capsys, argv=["solve", path, "--family", "6"])

    assert code == run.EXIT_ABSENT
    assert payload["status"] == "exhausted"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_solve_timeout(tmp_path, capsys):
    path = str(tmp_path / "k12.h3")
    hg_format.write_h3(graph=graph_factory.gen_complete(n=12), path=path)

    (code, payload) = _json(capsys=capsys, argv=["--budget", "3", "solve", path, "--family", "12"])

    assert code == run.EXIT_INCONCLUSIVE
    assert payload["status"] == "timeout"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_pancyclic_csv(tmp_path, capsys):
    path = str(tmp_path / "k8.h3")
    hg_format.write_h3(graph=graph_factory.gen_complete(n=8), path=path)

    assert run.main(argv=["--format", "csv", "solve", path, "--pancyclic"]) == run.EXIT_OK

    lines = capsys.readouterr().out.splitlines()

    assert lines[0] == "q,status,cycle"
    assert [line.split(",")[:2] for line in lines[1:]] == [["6", "found"], ["8", "found"]]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_color_cycle(capsys):
    (code, payload) = _json(capsys=capsys, argv=["color-cycle", "--n", "6", "--sizes", "3,0,3"])

    assert code == run.EXIT_OK
    assert payload["coloring"] == "RBRBRB"

    (code, payload) = _json(capsys=capsys, argv=["color-cycle", "--n", "6", "--sizes", "1,1,4"])

    assert code == run.EXIT_ABSENT
    assert not payload["feasible"]
    assert run.main(argv=["color-cycle", "--n", "6", "--sizes", "1,1"]) == run.EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_embed_tripartite(capsys):
    (code, payload) = _json(
        capsys=capsys, argv=["embed-tripartite", "--parts", "2,2,2", "--lengths", "3,3"]
    )

    assert code == run.EXIT_OK
    assert [(row["v1"], row["v2"], row["v3"]) for row in payload["rows"]] == [(1, 1, 1)] * 2

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_apportion(capsys):
    (code, payload) = _json(capsys=capsys, argv=["apportion", "--q", "10", "--weights", "1/3,2/3"])

    assert code == run.EXIT_OK
    assert payload["counts"] in ([3, 7], [4, 6])
    assert sum(payload["counts"]) == 10

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_good_pair(capsys):
    (code, payload) = _json(
        capsys=capsys, argv=["good-pair", "--n", "1000000", "--k", "0", "--eta", "0.1"]
    )

    assert code == run.EXIT_OK
    assert (payload["a"], payload["b"]) == (1000, 1985)

    (code, payload) = _json(capsys=capsys, argv=["good-pair", "--n", "100", "--k", "99",
                                                  "--eta", "0.1"])

    assert code == run.EXIT_ABSENT
    assert "error" in payload
    assert run.main(argv=["good-pair", "--n", "100", "--k", "0", "--eta", "2"]) == run.EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_balance(capsys):
    (code, payload) = _json(
        capsys=capsys, argv=["balance", "--targets", "10,10", "--lengths", "6,6,8"]
    )

    assert code == run.EXIT_ABSENT
    assert payload["proven_infeasible"]

    (code, payload) = _json(capsys=capsys, argv=["balance", "--a-transform", "6,8"])

    assert code == run.EXIT_OK
    assert payload["coefficients"] == [-1, 1]
    assert run.main(argv=["balance", "--targets", "10"]) == run.EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
@pytest.mark.parametrize("argv", [["bogus"], ["solve"], ["--format", "xml", "codegree", "x"]])
def test_usage_errors_exit_64(argv):
    with pytest.raises(SystemExit) as raised:
        run.main(argv=argv)

    assert raised.value.code == run.EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_missing_file_is_a_usage_error(tmp_path):
    assert run.main(argv=["codegree", str(tmp_path / "missing.h3")]) == run.EXIT_USAGE

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_reg(tmp_path, capsys):
    path = str(tmp_path / "view.h3")
    hg_format.write_h3(graph=regularity.complete_view(sizes=(5, 5, 5)).host, path=path)
    parts = "0-4;5-9;10-14"

    (code, payload) = _json(capsys=capsys, argv=[
        "reg", "check", path, "--parts", parts, "--eps", "0.5", "--d", "0.5", "--mode", "half"
    ])

    assert code == run.EXIT_OK
    assert (payload["status"], payload["density"]) == ("holds", "1")

    (code, payload) = _json(capsys=capsys, argv=[
        "reg", "prune", path, "--parts", parts, "--eps", "0.2", "--d", "0.5"
    ])

    assert code == run.EXIT_OK
    assert payload["post_mode"] == "super"
    assert [len(part) for part in payload["parts"]] == [4, 4, 4]

    (code, payload) = _json(capsys=capsys, argv=[
        "reg", "prune", path, "--parts", parts, "--eps", "0.5", "--d", "0.5"
    ])

    assert code == run.EXIT_INCONCLUSIVE
    assert payload["status"] == "unchecked"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_tile(k6_file, empty_file, capsys):
    (code, payload) = _json(
        capsys=capsys, argv=["tile", k6_file, "--p", "1", "--q", "3", "--min-cover", "6"]
    )

    assert code == run.EXIT_OK
    assert payload["covered"] == 6

    (code, payload) = _json(
        capsys=capsys, argv=["tile", empty_file, "--p", "1", "--q", "3", "--min-cover", "6"]
    )

    assert code == run.EXIT_ABSENT
    assert payload["status"] == "exhausted"

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_verify_extremal(capsys):
    (code, payload) = _json(
        capsys=capsys, argv=["verify", "extremal", "--n", "6", "--family", "6", "--solver"]
    )

    assert code == run.EXIT_OK
    assert (payload["cover_number"], payload["solver_status"]) == (2, "exhausted")

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_verify_embedding(k6_file, empty_file, tmp_path, capsys):
    stored = str(tmp_path / "embedding.json")

    with open(stored, mode="w", encoding="utf-8") as handle:
        json.dump({"embedding": [[0, 1, 2, 3, 4, 5]]}, handle)

    argv = ["--family", "6", "--embedding", stored, "--spanning"]
    (code, payload) = _json(capsys=capsys, argv=["verify", "embedding", k6_file] + argv)

    assert code == run.EXIT_OK
    assert payload == {"ok": True, "violation": None}

    (code, payload) = _json(capsys=capsys, argv=["verify", "embedding", empty_file] + argv)

    assert code == run.EXIT_ABSENT
    assert "{0, 1, 2}" in payload["violation"]

#---------------------------------------------------------------------------------------------------
#---------------------------------------------------------------------------------------------------
def test_experiment_then_verify_run(tmp_path, capsys):
    out = str(tmp_path / "run")
    argv = ["--out", out, "experiment", "--n-min", "6", "--n-max", "6", "--trials", "1"]

    assert run.main(argv=argv) == run.EXIT_OK

    capsys.readouterr()
    (code, payload) = _json(capsys=capsys, argv=["verify", "run", out])

    assert code == run.EXIT_OK
    assert payload["rows"] == 5
    assert payload["failures"] == []
