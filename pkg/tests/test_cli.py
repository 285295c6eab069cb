import csv
import io
import json

import pytest

from algbfs import corpus
from algbfs.cli import EXIT_MISMATCH, EXIT_USAGE, main
from algbfs.ingest import write_cache, write_snap


@pytest.fixture
def fig_file(tmp_path):
    p = tmp_path / "fig.txt"
    write_snap(corpus.labelled_path5(), p)
    return str(p)


def _run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def _rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_run_counts(fig_file):
    code, text = _run(["run", "--graph", fig_file, "--source", "2", "--count-ops", "--check"])
    assert code == 0
    (row,) = _rows(text)
    assert row["semiring_evals"] == "8"
    assert row["steps"] == "5"
    assert row["wallclock_seconds"] == ""


def test_run_without_counts_leaves_blank(fig_file):
    (row,) = _rows(_run(["run", "--graph", fig_file, "--source", "2", "--algo", "spmv"])[1])
    assert row["semiring_evals"] == ""


def test_run_is_byte_stable(fig_file):
    argv = ["run", "--graph", fig_file, "--source", "2", "--count-ops", "--algo", "parallel", "--threads", "4"]
    assert _run(argv)[1] == _run(argv)[1]


def test_run_time_flag(fig_file):
    (row,) = _rows(_run(["run", "--graph", fig_file, "--source", "2", "--time"])[1])
    assert float(row["wallclock_seconds"]) >= 0


def test_compare_json(fig_file):
    code, text = _run(["compare", "--graph", fig_file, "--source", "2", "--format", "json", "--check"])
    assert code == 0
    rows = {r["variant"]: r for r in json.loads(text)}
    assert rows["spmv"]["semiring_evals"] == 80
    assert rows["spmv"]["ratio_to_submatrix"] == 10
    assert rows["submatrix-allnz"]["semiring_evals"] == 8


def test_stats(fig_file):
    (row,) = _rows(_run(["stats", "--graph", fig_file, "--source", "2"])[1])
    assert (row["n"], row["m"], row["eccentricity"], row["mean_deg"]) == ("5", "4", "4", "1.6")


def test_default_source_is_searched(fig_file):
    (row,) = _rows(_run(["stats", "--graph", fig_file])[1])
    assert row["eccentricity"] == "4"


def test_random_graph_and_cache(tmp_path):
    code, text = _run(["run", "--graph", "gnp:60:0.05", "--seed", "3", "--count-ops", "--semiring", "tropical"])
    assert code == 0
    p = tmp_path / "g.flab"
    write_cache(corpus.gnp(60, 0.05, seed=3), p)
    assert _run(["run", "--graph", str(p), "--count-ops", "--semiring", "tropical", "--seed", "3"])[1].split("\n")[1].split(",")[1:] == text.split("\n")[1].split(",")[1:]


def test_missing_file_is_usage_error(tmp_path):
    assert _run(["run", "--graph", str(tmp_path / "nope.txt")])[0] == EXIT_USAGE


def test_unknown_source(fig_file):
    assert _run(["run", "--graph", fig_file, "--source", "99"])[0] == EXIT_USAGE


def test_bad_gnp_spec():
    assert _run(["run", "--graph", "gnp:x"])[0] == EXIT_USAGE


def test_argparse_errors(fig_file):
    with pytest.raises(SystemExit) as info:
        main(["run", "--graph", fig_file, "--threads", "0"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit):
        main(["run"])


def test_check_detects_mismatch(fig_file, monkeypatch):
    import algbfs.cli as cli

    real = cli.run_variant

    def broken(*args, **kw):
        run = real(*args, **kw)
        run.output.levels[0] += 1
        return run

    monkeypatch.setattr(cli, "run_variant", broken)
    assert _run(["run", "--graph", fig_file, "--source", "2", "--check"])[0] == EXIT_MISMATCH


def test_verify_small():
    code, text = _run(["verify", "--graphs", "5", "--max-n", "12"])
    assert code == 0
    assert text.count("PASS") == 5
