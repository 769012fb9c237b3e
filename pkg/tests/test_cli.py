"""End-to-end command tests through main(argv): output bytes and exit codes."""

import hashlib
import json

import pytest

from signotopes import __version__
from signotopes.cli import main


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    cache_dir = tmp_path / "cache"
    monkeypatch.setenv("SIGNOTOPES_CACHE_DIR", str(cache_dir))
    return cache_dir


def test_count_all_methods_agree(capsys, isolated_cache):
    assert main(["count", "--d", "2", "--p", "3", "--method", "all"]) == 0
    out = capsys.readouterr().out
    assert out == "formula 9\nbfs 9\nnaive 9\n"
    cached = json.loads((isolated_cache / "counts.json").read_text())
    assert cached["version"] == __version__
    assert cached["counts"]["2:3:formula"] == 9
    assert cached["counts"]["2:3:naive"] == 9


def test_count_reuses_the_cache(capsys, isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "counts.json").write_text(
        json.dumps({"version": __version__, "counts": {"2:3:formula": 999}})
    )
    assert main(["count", "--d", "2", "--p", "3"]) == 0
    assert capsys.readouterr().out == "formula 999\n"


def test_count_ignores_stale_cache_versions(capsys, isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "counts.json").write_text(
        json.dumps({"version": "0.0.0", "counts": {"2:3:formula": 999}})
    )
    assert main(["count", "--d", "2", "--p", "3"]) == 0
    assert capsys.readouterr().out == "formula 9\n"
    cached = json.loads((isolated_cache / "counts.json").read_text())
    assert cached["version"] == __version__
    assert cached["counts"] == {"2:3:formula": 9}


def test_count_with_explicit_n_skips_the_cache(capsys, isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "counts.json").write_text(
        json.dumps({"version": __version__, "counts": {"2:3:bfs": 777}})
    )
    assert main(["count", "--d", "2", "--p", "3", "--method", "bfs", "--n", "6"]) == 0
    assert capsys.readouterr().out == "bfs 9\n"
    cached = json.loads((isolated_cache / "counts.json").read_text())
    assert cached["counts"]["2:3:bfs"] == 777  # untouched


def test_count_disagreement_exits_3(capsys, isolated_cache):
    isolated_cache.mkdir(parents=True)
    (isolated_cache / "counts.json").write_text(
        json.dumps({"version": __version__, "counts": {"2:2:formula": 999}})
    )
    assert main(["count", "--d", "2", "--p", "2", "--method", "all"]) == 3
    captured = capsys.readouterr()
    assert "formula 999" in captured.out
    assert "bfs 5" in captured.out
    assert "disagree" in captured.err


def test_count_rejects_bad_arguments(capsys):
    assert main(["count", "--d", "0", "--p", "1"]) == 1
    assert "error" in capsys.readouterr().err


def test_count_naive_guard_refuses(capsys):
    assert main(["count", "--d", "2", "--p", "10", "--method", "naive"]) == 2
    assert "refused" in capsys.readouterr().err


def test_table_csv_stdout(capsys):
    assert main(["table", "--max-d", "2", "--max-p", "3"]) == 0
    assert capsys.readouterr().out == "d\\p,0,1,2,3\n1,1,2,2,2\n2,1,3,5,9\n"


def test_table_json_triples(capsys):
    assert main(["table", "--max-d", "3", "--max-p", "3", "--format", "json"]) == 0
    triples = json.loads(capsys.readouterr().out)
    assert len(triples) == 12
    assert triples[0] == {"d": 1, "p": 0, "value": 1}
    assert triples[-1] == {"d": 3, "p": 3, "value": 20}


def test_table_output_figure_and_manifest(tmp_path):
    out = tmp_path / "table.csv"
    fig = tmp_path / "table.png"
    man = tmp_path / "table.manifest.json"
    argv = [
        "table", "--max-d", "3", "--max-p", "4",
        "--output", str(out), "--figure", str(fig), "--manifest", str(man),
    ]
    assert main(argv) == 0
    payload = out.read_bytes()
    assert payload.startswith(b"d\\p,0,1,2,3,4\n")
    assert fig.stat().st_size > 0
    manifest = json.loads(man.read_text())
    assert manifest["command"] == "table"
    assert manifest["params"] == {"max_d": 3, "max_p": 4, "format": "csv"}
    assert manifest["version"] == __version__
    assert manifest["digest"] == "sha256:" + hashlib.sha256(payload).hexdigest()


def test_map_records(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    src.write_text(
        '{"n":5,"d":2,"plus":[[1,2],[4,5]]}\n'
        '{"n":5,"d":2,"plus":[[1,5]]}\n'
        '{"n":5,"d":2,"plus":[]}\n'
    )
    assert main(["map", "--input", str(src), "--to-n", "6"]) == 0
    assert capsys.readouterr().out == (
        '{"n":6,"d":2,"plus":[[1,2],[5,6]]}\n'
        '{"n":6,"d":2,"plus":[[1,6]]}\n'
        '{"n":6,"d":2,"plus":[]}\n'
    )


def test_map_partial_failure_exits_2(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    src.write_text(
        '{"n":5,"d":2,"plus":[[1,2],[4,5]]}\n'  # refused at n=3: level bound is 1
        '{"n":5,"d":2,"plus":[[2,3]]}\n'  # not a valid member at all
        '{"n":5,"d":2,"plus":[]}\n'
    )
    assert main(["map", "--input", str(src), "--to-n", "3"]) == 2
    captured = capsys.readouterr()
    assert captured.out == '{"n":3,"d":2,"plus":[]}\n'
    assert "line 1 refused" in captured.err
    assert "line 2" in captured.err


def test_map_malformed_input_exits_1(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    src.write_text('{"n":5,"d":2,"plus":[]}\n{nope\n')
    assert main(["map", "--input", str(src), "--to-n", "6"]) == 1
    assert "line 2: malformed JSON" in capsys.readouterr().err


def test_verify_report(tmp_path, capsys):
    src = tmp_path / "in.ndjson"
    src.write_text(
        '{"n":5,"d":2,"plus":[[1,2],[4,5]]}\n'
        '{"n":5,"d":2,"plus":[[2,3]]}\n'
        '{"n":3,"d":2,"plus":[[1,2],[1,3],[2,3]]}\n'
    )
    assert main(["verify", "--input", str(src)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0]) == {
        "record": 1,
        "n": 5,
        "d": 2,
        "valid": True,
        "plus_count": 2,
        "p_sequence": [1, 0, 1],
        "classification": [[[1, 2], 2], [[4, 5], 0]],
    }
    assert json.loads(lines[1]) == {
        "record": 2,
        "n": 5,
        "d": 2,
        "valid": False,
        "plus_count": 1,
        "offending_series": {"B": [2, 3], "slot": 1, "signs": "-+--"},
    }
    # level above n - d: valid, but outside the component theory
    assert json.loads(lines[2]) == {
        "record": 3,
        "n": 3,
        "d": 2,
        "valid": True,
        "plus_count": 3,
        "p_sequence": None,
        "classification": None,
    }


def test_ferrers_count_only(capsys):
    assert main(["ferrers", "--d", "2", "--i", "1", "--p", "4", "--count-only"]) == 0
    assert capsys.readouterr().out == "5\n"


def test_ferrers_ndjson(capsys):
    assert main(["ferrers", "--d", "2", "--i", "1", "--p", "2"]) == 0
    assert capsys.readouterr().out == (
        '{"d":2,"i":1,"points":[[1,1],[1,2]]}\n'
        '{"d":2,"i":1,"points":[[1,1],[2,1]]}\n'
    )


def test_ferrers_figure_conflicts_with_count_only(tmp_path, capsys):
    argv = [
        "ferrers", "--d", "2", "--i", "1", "--p", "2",
        "--count-only", "--figure", str(tmp_path / "x.png"),
    ]
    assert main(argv) == 1
    assert "count-only" in capsys.readouterr().err


def test_ferrers_figure_rejects_high_dimension(tmp_path, capsys):
    argv = [
        "ferrers", "--d", "3", "--i", "1", "--p", "2",
        "--figure", str(tmp_path / "x.png"),
    ]
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_hasse_dot(capsys):
    assert main(["hasse", "--n", "5", "--d", "2", "--p", "1"]) == 0
    assert capsys.readouterr().out == (
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        '  n0 [label="[]"];\n'
        '  n1 [label="[[1,2]]"];\n'
        '  n2 [label="[[1,5]]"];\n'
        '  n3 [label="[[4,5]]"];\n'
        "  n0 -> n1;\n"
        "  n0 -> n2;\n"
        "  n0 -> n3;\n"
        "}\n"
    )


def test_hasse_json_and_figure(tmp_path, capsys):
    fig = tmp_path / "hasse.png"
    argv = [
        "hasse", "--n", "5", "--d", "2", "--p", "2",
        "--format", "json", "--figure", str(fig),
    ]
    assert main(argv) == 0
    obj = json.loads(capsys.readouterr().out)
    assert [node["level"] for node in obj["nodes"]] == [0, 1, 1, 1, 2, 2, 2, 2, 2]
    assert len(obj["edges"]) > 0
    assert fig.stat().st_size > 0


def test_conjecture_command(capsys):
    assert main(["conjecture", "--max-d", "4"]) == 0
    out = capsys.readouterr().out
    assert "d=2: level-3 size 9, recursion gives 9: holds" in out
    assert "d=4: level-3 size 36, recursion gives 36: holds" in out
    assert "open beyond" in out


def test_tightness_command(capsys):
    assert main(["tightness", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "formula 11, enumerated 11" in out
    assert "formula 14, enumerated 14" in out
    assert "gap 3" in out


def test_tightness_guard_exits_2(capsys):
    assert main(["tightness", "--n", "10"]) == 2
    assert "refused" in capsys.readouterr().err


def test_usage_errors_exit_1(capsys):
    assert main(["no-such-command"]) == 1
    assert main(["count", "--d", "2"]) == 1  # --p missing
    assert main([]) == 1
    err = capsys.readouterr().err
    assert "usage error" in err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out
