"""Tests for the command-line application and the mining service behind it."""

import csv
import io
import json

import pytest

from app import EXIT_DATA, EXIT_OK, EXIT_USAGE, run
from config import Config
from helpers import make_db
from services import MiningService


def _lines(text):
    return [json.loads(line) for line in text.splitlines()]


class TestMiningCommands:

    def test_frequent(self, basket_files, capsys):
        assert run(["frequent", "--input", basket_files["db1"], "--minsup", "0.5"]) == EXIT_OK
        records = _lines(capsys.readouterr().out)
        assert len(records) == 6
        assert records[3] == {
            "kind": "frequent",
            "items": ["a", "b"],
            "measures": {"support": 0.5, "support_fraction": "2/4"},
        }

    @pytest.mark.parametrize("argv", [
        ["frequent", "db1", "--minsup", "0.25"],
        ["closed", "db6", "--minsup", "0.5", "--compression"],
        ["maximal", "db1", "--minsup", "0.5"],
        ["clique", "db3", "--minsup", "0.3"],
        ["biclique", "db4", "--minsup", "0.2"],
        ["indirect", "db2", "--ts", "0.1", "--tf", "0.4", "--td", "1.0"],
        ["star", "db7", "--ts", "0.1", "--tf", "0.25", "--td", "1.0"],
        ["allcorr", "db5", "--mincorr", "0.5"],
        ["unexpected", "db5", "--mincorr", "1.5"],
        ["eval", "db5", "--pattern", "a,b,c", "--explain",
         "--constraint", "col(X) >= 1.5 and forall S in sub(X) where len(S) == 2 : col(S) < 1.5"],
        ["ihg", "db5", "--pattern", "a,b,c", "--format", "dot", "--constraint", "col(S) >= 1.5 and len(S) >= 2"],
        ["ihg", "db2", "--from", "indirect", "--format", "dot", "--ts", "0.1", "--tf", "0.4", "--td", "1.0"],
        ["curve", "db1", "--pattern", "a,b,c", "--format", "csv"],
        ["curve", "db5", "--pattern", "a,b,c", "--measure", "lift", "--format", "json"],
    ])
    def test_identical_invocations_identical_output(self, basket_files, capsys, argv):
        command, name, *rest = argv
        full = [command, "--input", basket_files[name]] + rest
        assert run(full) == EXIT_OK
        first = capsys.readouterr().out
        assert run(full) == EXIT_OK
        assert first
        assert capsys.readouterr().out == first

    def test_star(self, basket_files, capsys):
        argv = ["star", "--input", basket_files["db7"], "--ts", "0.1", "--tf", "0.25", "--td", "1.0"]
        assert run(argv) == EXIT_OK
        assert _lines(capsys.readouterr().out)[0]["leaves"] == ["a", "b", "e"]

    @pytest.mark.parametrize("argv, count", [
        (["closed", "--minsup", "0.5"], 6),
        (["maximal", "--minsup", "0.5"], 3),
        (["clique", "--minsup", "0.5"], 1),
        (["biclique", "--minsup", "0.5"], 0),
        (["indirect", "--ts", "0.1", "--tf", "0.4", "--td", "1"], 0),
        (["allcorr", "--mincorr", "0.5"], 4),
        (["unexpected", "--mincorr", "99"], 0),
    ])
    def test_db1_counts(self, basket_files, capsys, argv, count):
        assert run([argv[0], "--input", basket_files["db1"]] + argv[1:]) == EXIT_OK
        assert len(_lines(capsys.readouterr().out)) == count

    def test_indirect(self, basket_files, capsys):
        argv = ["indirect", "--input", basket_files["db2"], "--ts", "0.1", "--tf", "0.4", "--td", "1.0"]
        assert run(argv) == EXIT_OK
        records = _lines(capsys.readouterr().out)
        assert [(r["a"], r["b"], r["mediator"]) for r in records] == [("a", "b", ["c"])]

    def test_unexpected_with_pairs(self, basket_files, capsys):
        argv = ["unexpected", "--input", basket_files["db2"], "--mincorr", "1", "--include-pairs"]
        assert run(argv) == EXIT_OK
        assert [r["items"] for r in _lines(capsys.readouterr().out)] == [["a", "c"], ["b", "c"]]

    def test_compression(self, basket_files, capsys):
        assert run(["closed", "--input", basket_files["db6"], "--minsup", "0.5", "--compression"]) == EXIT_OK
        records = _lines(capsys.readouterr().out)
        assert [r["items"] for r in records] == [["a", "b"]]
        assert records[0]["measures"]["equal_support_subpatterns"] == 2

    def test_output_file(self, basket_files, tmp_path, capsys):
        target = tmp_path / "out.jsonl"
        argv = ["maximal", "--input", basket_files["db1"], "--minsup", "0.5"]
        assert run(argv + ["--output", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        run(argv)
        assert target.read_text(encoding="utf-8") == capsys.readouterr().out


class TestAnalysisCommands:

    def test_eval(self, basket_files, capsys):
        argv = ["eval", "--input", basket_files["db5"], "--pattern", "a,b,c", "--constraint", "col(X) >= 1.5"]
        assert run(argv) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"verdict": True, "pattern": ["a", "b", "c"]}

    def test_eval_explain(self, basket_files, capsys):
        argv = [
            "eval", "--input", basket_files["db5"], "--pattern", "c,a,b", "--explain",
            "--constraint", "col(X)>=1.5 and forall S in sub(X) where len(S)==2 : col(S)<1.5",
        ]
        assert run(argv) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["verdict"] is True
        assert record["constraint"] == "col(X) >= 1.5 and forall S in sub(X) where len(S) == 2 : col(S) < 1.5"
        assert record["witnesses"] == [["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"]]

    def test_eval_unknown_item_has_zero_support(self, basket_files, capsys):
        argv = ["eval", "--input", basket_files["db1"], "--pattern", "a,z", "--constraint", "support(X) > 0"]
        assert run(argv) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["verdict"] is False

    def test_ihg_json(self, basket_files, capsys):
        argv = [
            "ihg", "--input", basket_files["db1"], "--pattern", "a,b,c",
            "--constraint", "support(S) >= 0.5 and len(S) >= 2",
        ]
        assert run(argv) == EXIT_OK
        graph = json.loads(capsys.readouterr().out)
        assert graph["vertices"] == ["a", "b", "c"]
        assert len(graph["hyperedges"]) == 3

    def test_ihg_dot(self, basket_files, capsys):
        argv = [
            "ihg", "--input", basket_files["db5"], "--pattern", "a,b,c", "--format", "dot",
            "--constraint", "col(S) >= 1.5 and len(S) >= 2",
        ]
        assert run(argv) == EXIT_OK
        text = capsys.readouterr().out
        assert text.startswith("graph ")
        assert text.count("e0 --") == 3

    def test_ihg_from_indirect(self, basket_files, capsys):
        argv = [
            "ihg", "--input", basket_files["db2"], "--from", "indirect",
            "--ts", "0.1", "--tf", "0.4", "--td", "1.0",
        ]
        assert run(argv) == EXIT_OK
        graphs = _lines(capsys.readouterr().out)
        assert len(graphs) == 1
        assert [e["polarity"] for e in graphs[0]["hyperedges"]] == ["negative", "positive", "positive"]

    def test_ihg_from_needs_thresholds(self, basket_files, capsys):
        assert run(["ihg", "--input", basket_files["db1"], "--from", "clique"]) == EXIT_USAGE
        assert "--minsup" in capsys.readouterr().err

    def test_curve_csv(self, basket_files, capsys):
        argv = ["curve", "--input", basket_files["db1"], "--pattern", "a,b,c", "--measure", "support"]
        assert run(argv) == EXIT_OK
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert len(rows) == 8
        assert rows[-1] == ["7", "a+b+c", "3", "support", "0.25"]

    def test_curve_json(self, basket_files, capsys):
        argv = ["curve", "--input", basket_files["db5"], "--pattern", "a,b,c", "--measure", "lift", "--format", "json"]
        assert run(argv) == EXIT_OK
        record = json.loads(capsys.readouterr().out)
        assert record["points"][0]["value"] is None


class TestExitStatus:

    def test_threshold_out_of_range(self, basket_files, capsys):
        assert run(["frequent", "--input", basket_files["db1"], "--minsup", "1.5"]) == EXIT_USAGE
        assert "error" in capsys.readouterr().err

    @pytest.mark.parametrize("argv", [
        ["mine"],
        ["frequent", "--minsup", "0.5"],
        ["frequent", "--input", "x", "--minsup", "0.5", "--bogus"],
        ["frequent", "--input", "x", "--minsup", "abc"],
        ["curve", "--input", "x", "--pattern", "a,b", "--measure", "confidence"],
    ])
    def test_usage_errors(self, argv):
        assert run(argv) == EXIT_USAGE

    def test_inconsistent_thresholds(self, basket_files):
        argv = ["indirect", "--input", basket_files["db2"], "--ts", "0.5", "--tf", "0.2", "--td", "1"]
        assert run(argv) == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        assert run(["frequent", "--input", str(tmp_path / "none.basket"), "--minsup", "0.5"]) == EXIT_DATA

    def test_bad_constraint(self, basket_files, capsys):
        argv = ["eval", "--input", basket_files["db1"], "--pattern", "a", "--constraint", "support(X) >="]
        assert run(argv) == EXIT_DATA
        assert "column" in capsys.readouterr().err

    def test_bad_encoding(self, tmp_path):
        path = tmp_path / "bad.basket"
        path.write_bytes(b"a b\n\xff\n")
        assert run(["frequent", "--input", str(path), "--minsup", "0.5"]) == EXIT_DATA

    def test_help_names_the_application(self, monkeypatch, capsys):
        monkeypatch.setattr(Config, "APP_NAME", "BasketMiner")
        assert run(["--help"]) == EXIT_OK
        assert "BasketMiner" in capsys.readouterr().out

    @pytest.mark.parametrize("command, names", [

        ("frequent", ["minisupport"]),
        ("indirect", ["t_s", "t_f", "t_d"]),
        ("star", ["t_s", "t_f", "t_d"]),
        ("allcorr", ["min_correlation"]),
        ("unexpected", ["min_correlation"]),
    ])
    def test_help_names_thresholds(self, capsys, command, names):
        assert run([command, "--help"]) == EXIT_OK
        out = capsys.readouterr().out
        for name in names:
            assert name in out


class TestMiningService:

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            MiningService(make_db("db1")).mine("bogus")

    def test_graph_kinds_only(self):
        with pytest.raises(ValueError):
            MiningService(make_db("db1")).graphs("frequent")

    def test_with_labels(self):
        service = MiningService(make_db("db1"))
        assert service.with_labels(["a"]) is service
        extended = service.with_labels(["a", "z"])
        assert extended.db.support(extended.resolve(["z"])) == 0
