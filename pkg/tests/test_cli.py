"""CLI behavior: exit codes, determinism, round trips."""

import io
import json

from click.testing import CliRunner

from tembed.cli import main
from tembed.embedding import run_recurrence
from tembed.render import read_csv
from tembed.rings import rational


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def test_verify_theorem_passes():
    result = invoke("verify", "theorem", "--n", "4", "--a", "7/10")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["schema"] == 1 and report["passed"]


def test_verify_unknown_suite_is_usage_error():
    assert invoke("verify", "nonsense").exit_code == 2


def test_invalid_parameters_are_usage_errors():
    assert invoke("verify", "theorem", "--a", "banana").exit_code == 2
    assert invoke("verify", "theorem", "--a", "-1").exit_code == 2
    assert invoke("emit", "--n", "0").exit_code == 2
    assert invoke("verify", "theorem", "--tol", "0", "--n", "2").exit_code == 2


def test_emit_stage_one_csv():
    result = invoke("emit", "--n", "1", "--a", "1", "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.strip().split("\n")
    assert lines[0] == "j,k,re_t,im_t,re_o,im_o"
    assert len(lines) == 6
    rows = {tuple(line.split(",")[:2]): line.split(",")[2:] for line in lines[1:]}
    assert rows[("1", "0")] == ["1", "0", "1", "0"]
    assert rows[("0", "1")] == ["0", "1", "0", "1"]
    assert rows[("0", "0")] == ["0", "0", "1", "1"]


def test_emit_is_deterministic():
    first = invoke("emit", "--n", "6", "--a", "7/10", "--format", "csv")
    second = invoke("emit", "--n", "6", "--a", "7/10", "--format", "csv")
    assert first.output == second.output
    rep1 = invoke("verify", "lemmas", "--n", "4", "--a", "7/10", "--seed", "5")
    rep2 = invoke("verify", "lemmas", "--n", "4", "--a", "7/10", "--seed", "5")
    assert rep1.output == rep2.output


def test_exact_csv_round_trip():
    a = rational(7, 10)
    result = invoke("emit", "--n", "4", "--a", "7/10", "--format", "csv")
    assert result.exit_code == 0
    tvals, ovals = read_csv(io.StringIO(result.output))
    emb = run_recurrence(a, 4)
    for (j, k) in emb.vertices():
        assert tvals[(j, k)] == emb.T(j, k)
        assert ovals[(j, k)] == emb.O(j, k)


def test_emit_svg():
    result = invoke("emit", "--n", "8", "--a", "0.7", "--format", "svg")
    assert result.exit_code == 0
    assert result.output.startswith("<svg")
    assert 'stroke="black"' in result.output
    assert 'stroke="red"' in result.output


def test_unwritable_output_is_io_error(tmp_path):
    target = tmp_path / "missing" / "out.csv"
    result = invoke("emit", "--n", "1", "--a", "1", "--out", str(target))
    assert result.exit_code == 3


def test_bench_runs():
    result = invoke("bench", "--n", "4", "--a", "1")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["schema"] == 1
    assert "python" in report["float"]
    assert "max_bits_per_layer" in report["exact"]["wavefield"]
