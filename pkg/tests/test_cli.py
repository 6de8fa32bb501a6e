import json
import subprocess
import sys

import pytest

from esfg.cli import main

ES_DISCRETE = '{"kind":"es","universe":2,"causality":[[0,0],[1,1]],"conflict":[]}'
ES_INVALID = (
    '{"kind":"es","universe":2,"causality":[[0,0],[1,1],[0,1]],'
    '"conflict":[[0,1],[1,0]]}'
)


@pytest.fixture
def es_file(tmp_path):
    path = tmp_path / "discrete.json"
    path.write_text(ES_DISCRETE)
    return path


def test_check_valid(capsys, es_file):
    assert main(["check", str(es_file)]) == 0
    assert "valid es document" in capsys.readouterr().out


def test_check_invalid(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(ES_INVALID)
    assert main(["check", str(path)]) == 1
    assert "conflict-not-propagating" in capsys.readouterr().out


def test_check_malformed(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind":"es","universe":2,"causality":[[0,3]],"conflict":[]}')
    assert main(["check", str(path)]) == 2
    assert "bounds" in capsys.readouterr().err


def test_represent_outputs_a_checked_family(capsys, es_file):
    assert main(["represent", str(es_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "representation"
    assert payload["family"] == [[0, [1, 2]], [1, [0, 1]]]


def test_represent_rejects_invalid_structures(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(ES_INVALID)
    assert main(["represent", str(path)]) == 1
    assert "conflict-not-propagating" in capsys.readouterr().err


def test_convert_round_trip(tmp_path, es_file):
    fg_path = tmp_path / "graph.json"
    assert main(["convert", "--to", "fg", str(es_file), "-o", str(fg_path)]) == 0
    graph = json.loads(fg_path.read_text())
    assert graph["kind"] == "fg"
    assert graph["undirected"] == [[0, 1], [1, 0]]
    assert "family" in graph

    back_path = tmp_path / "back.json"
    assert main(["convert", "--to", "es", str(fg_path), "-o", str(back_path)]) == 0
    back = json.loads(back_path.read_text())
    assert back["kind"] == "es"
    assert back["causality"] == [[0, 0], [1, 1]]
    assert back["conflict"] == []


def test_convert_requires_the_other_kind(capsys, es_file):
    assert main(["convert", "--to", "es", str(es_file)]) == 2


def test_enumerate_count_only(capsys):
    assert main(["enumerate", "--n", "2", "--kind", "es", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["enumerate", "--n", "3", "--kind", "fg", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "41"


def test_enumerate_emits_files(tmp_path, capsys):
    out = tmp_path / "emitted"
    assert main(["enumerate", "--n", "2", "--kind", "es", "--emit", str(out)]) == 0
    files = sorted(out.glob("es-n2-*.json"))
    assert len(files) == 4
    seen = {f.read_bytes() for f in files}
    assert len(seen) == 4


def test_enumerate_size_gate(capsys):
    assert main(["enumerate", "--n", "5", "--kind", "es", "--count-only"]) == 2
    assert "--slow" in capsys.readouterr().err
    assert main(["enumerate", "--n", "6", "--kind", "es", "--count-only", "--slow"]) == 2


def test_verify_small(capsys):
    assert main(["verify", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "counts-agree-on-both-paths: PASS" in out
    assert "FAIL" not in out


def test_dot_hasse(capsys, tmp_path):
    path = tmp_path / "chain.json"
    path.write_text(
        '{"kind":"es","universe":3,"causality":'
        '[[0,0],[0,1],[0,2],[1,1],[1,2],[2,2]],"conflict":[]}'
    )
    assert main(["dot", "--hasse", str(path)]) == 0
    rendered = capsys.readouterr().out
    assert "0 -> 1;" in rendered and "1 -> 2;" in rendered
    assert "0 -> 2;" not in rendered


def test_oeis_offline_with_cache(capsys, tmp_path):
    (tmp_path / "A000112.bfile.txt").write_text("0 1\n1 1\n2 4\n3 41\n")
    code = main(
        [
            "oeis",
            "--sequence",
            "A000112",
            "--kind",
            "es",
            "--upto",
            "3",
            "--offline",
            "--cache",
            str(tmp_path),
        ]
    )
    assert code == 0
    assert "full prefix of length 4" in capsys.readouterr().out


def test_oeis_reports_mismatch_without_failing(capsys, tmp_path):
    (tmp_path / "A000112.bfile.txt").write_text("0 1\n1 1\n2 5\n")
    code = main(
        [
            "oeis",
            "--sequence",
            "A000112",
            "--kind",
            "es",
            "--upto",
            "2",
            "--offline",
            "--cache",
            str(tmp_path),
        ]
    )
    assert code == 0
    assert "MISMATCH at position 2" in capsys.readouterr().out


def test_oeis_offline_cache_miss(capsys, tmp_path):
    code = main(
        [
            "oeis",
            "--sequence",
            "A000112",
            "--kind",
            "es",
            "--upto",
            "1",
            "--offline",
            "--cache",
            str(tmp_path),
        ]
    )
    assert code == 2
    assert "cache-miss" in capsys.readouterr().err


def test_stdin_and_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "esfg", "check", "-"],
        input=ES_DISCRETE,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert "valid es document" in proc.stdout
