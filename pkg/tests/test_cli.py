"""CLI layer: census files and caching, the verify suite, crossovers,
conjecture scans, ratio/saddle tables, exit codes."""

import json

import pytest

from hooklab.classes import ClassId
from hooklab.cli import (
    EXIT_BUDGET,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    asym_table,
    cached_census,
    census_csv_text,
    conjecture_scan,
    crossover_report,
    main,
    ratio_table,
    run_census,
    verify_report,
)


# --------------------------------------------------------------------------
# census files and cache
# --------------------------------------------------------------------------


def test_census_csv_contents(tmp_path):
    out = tmp_path / "r1.csv"
    run_census(ClassId.R1, 10, 2, str(out))
    text = out.read_text()
    lines = text.splitlines()
    assert lines[0] == "n,t,count"
    assert "4,1,3" in lines
    assert text.endswith("\n") and "\r" not in text
    assert len(lines) == 1 + 11 * 2
    sidecar = json.loads(out.with_suffix(".json").read_text())
    assert sidecar["class"] == "r1"
    assert sidecar["cardinality"][4] == 2
    assert sidecar["total_hooks"][10] == 10 * sidecar["cardinality"][10]
    assert sidecar["generated_by"].startswith("hooklab ")


def test_census_g2_two_hooks(tmp_path):
    out = tmp_path / "g2.csv"
    run_census(ClassId.G2, 2, 2, str(out))
    assert "2,2,1" in out.read_text().splitlines()  # (1,1) carries one 2-hook


def test_census_degenerate(tmp_path):
    out = tmp_path / "zero.csv"
    run_census(ClassId.R1, 0, 1, str(out))
    assert out.read_text() == "n,t,count\n0,1,0\n"


def test_cache_roundtrip_extension(tmp_path):
    cache = tmp_path / "cache"
    out_a = tmp_path / "a.csv"
    out_b = tmp_path / "b.csv"
    out_fresh = tmp_path / "fresh.csv"
    run_census(ClassId.G1, 20, 2, str(out_a), str(cache))
    assert (cache / "census-g1.json").is_file()
    run_census(ClassId.G1, 30, 2, str(out_b), str(cache))   # extend by 10
    run_census(ClassId.G1, 30, 2, str(out_fresh))           # no cache
    assert out_b.read_bytes() == out_fresh.read_bytes()
    # shrinking request reuses the cache without recomputation
    again = cached_census(ClassId.G1, 12, 1, str(cache))
    fresh = cached_census(ClassId.G1, 12, 1)
    assert again.counts == fresh.counts
    assert again.cardinality == fresh.cardinality


def test_cache_handles_t_max_increase(tmp_path):
    cache = tmp_path / "cache"
    first = cached_census(ClassId.R2, 15, 1, str(cache))
    wider = cached_census(ClassId.R2, 15, 3, str(cache))
    assert wider.t_max == 3
    assert [row[0] for row in wider.counts] == [row[0] for row in first.counts]
    assert wider.counts == cached_census(ClassId.R2, 15, 3).counts


def test_census_csv_text_shape():
    c = cached_census(ClassId.R1, 3, 2)
    text = census_csv_text(c)
    assert text.splitlines()[1] == "0,1,0"
    assert text.count("\n") == 1 + 4 * 2


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------


def test_verify_passes():
    results = verify_report(25)
    assert results and all(r.ok for r in results)
    names = [r.name for r in results]
    assert any("S11" in n for n in names)
    assert any("identity RR1" in n for n in names)
    assert any("identity LG1" in n for n in names)


def test_verify_degenerate():
    assert all(r.ok for r in verify_report(0))


def test_verify_reports_corruption():
    results = verify_report(20, _corrupt=("S11", 7, 1))
    bad = [r for r in results if not r.ok]
    assert len(bad) == 1
    assert "S11" in bad[0].name
    assert "n=7" in bad[0].detail  # names the exponent and both values
    assert "6" in bad[0].detail and "5" in bad[0].detail


def test_verify_ceiling():
    with pytest.raises(ValueError):
        verify_report(81)


# --------------------------------------------------------------------------
# crossovers
# --------------------------------------------------------------------------


def test_crossover_example_point():
    # by n = 4 the gap class already leads for 1-hooks: 3 > 2
    report = crossover_report("r-t1", 10)
    assert 4 not in report.violations


@pytest.mark.parametrize("pair", ["r-t1", "r-t2", "g-t1", "g-t2"])
def test_crossover_internal_consistency(pair):
    report = crossover_report(pair, 300)
    assert report.first_hold is not None
    assert all(v < report.first_hold for v in report.violations)
    # independent honesty pass over the emitted data
    from hooklab.cli import _CROSSOVER_PAIRS, _SERIES_BUILDERS

    lkey, rkey, direction = _CROSSOVER_PAIRS[pair]
    lhs, rhs = _SERIES_BUILDERS[lkey](300), _SERIES_BUILDERS[rkey](300)
    for n in range(report.first_hold, 301):
        if direction == "gt":
            assert lhs[n] > rhs[n]
        else:
            assert lhs[n] < rhs[n]


def test_crossover_discovered_points():
    # discovered on the first verified run and frozen as regression anchors
    assert crossover_report("r-t1", 200).first_hold == 8
    assert crossover_report("r-t2", 200).first_hold == 10
    assert crossover_report("g-t1", 200).first_hold == 9
    assert crossover_report("g-t2", 200).first_hold == 16


def test_crossover_guards():
    with pytest.raises(ValueError):
        crossover_report("r-t3", 100)
    with pytest.raises(ValueError):
        crossover_report("r-t1", 5001)


# --------------------------------------------------------------------------
# conjecture scan
# --------------------------------------------------------------------------


def test_conjecture_shared_pass():
    scans = conjecture_scan([3, 4], 40)
    assert len(scans) == 4  # two pairs per t
    for scan in scans:
        assert scan.holds_from is not None
        assert scan.counterexamples_above == []


def test_conjecture_absence_is_legal():
    # ties at tiny sizes keep the strict inequality from settling
    scans = conjecture_scan([3], 5)
    assert any(s.holds_from is None for s in scans)


def test_conjecture_guards():
    with pytest.raises(ValueError):
        conjecture_scan([2], 40)
    with pytest.raises(ValueError):
        conjecture_scan([], 40)
    with pytest.raises(ValueError):
        conjecture_scan([3], 121)


# --------------------------------------------------------------------------
# ratio and saddle tables
# --------------------------------------------------------------------------


def test_ratio_table_cross():
    table = ratio_table("r2-cross", [100, 200])
    assert table["limit"] == 1.5
    r100, r200 = (row["ratio"] for row in table["rows"])
    assert abs(r200 - 1.5) < abs(r100 - 1.5)


def test_ratio_table_model():
    table = ratio_table("r11-model", [50])
    row = table["rows"][0]
    assert row["ratio"] > 0
    assert abs(row["coefficient"] / row["model"] - row["ratio"]) < 1e-12


def test_ratio_table_guards():
    with pytest.raises(ValueError):
        ratio_table("bogus", [100])
    with pytest.raises(ValueError):
        ratio_table("r2-cross", [])
    with pytest.raises(ValueError):
        ratio_table("r2-cross", [9000])


def test_asym_table_monotone():
    table = asym_table("S11", [0.05, 0.02])
    assert table["monotone"] is True
    assert [row["epsilon"] for row in table["rows"]] == [0.05, 0.02]
    with pytest.raises(ValueError):
        asym_table("S11", [])


# --------------------------------------------------------------------------
# entry point and exit codes
# --------------------------------------------------------------------------


def test_main_census(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code = main(["census", "--class", "r1", "--n-max", "6", "--t-max", "1",
                 "--out", str(out), "--json"])
    assert code == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["class"] == "r1" and out.is_file()


def test_main_census_env_cache(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("HOOKLAB_CACHE", str(tmp_path / "envcache"))
    code = main(["census", "--class", "g2", "--n-max", "5", "--t-max", "1",
                 "--out", str(tmp_path / "g2.csv")])
    assert code == EXIT_OK
    assert (tmp_path / "envcache" / "census-g2.json").is_file()


def test_main_verify_ok(capsys):
    assert main(["verify", "--n-max", "15"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "verify: PASS" in out
    assert "[ok]" in out


def test_main_verify_json(capsys):
    assert main(["verify", "--n-max", "10", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is True
    assert all(chk["ok"] for chk in payload["checks"])


def test_main_usage_errors(tmp_path, capsys):
    assert main(["verify", "--n-max", "500"]) == EXIT_USAGE
    assert main(["crossover", "--pair", "nope", "--n-max", "10"]) == EXIT_USAGE
    assert main(["asym", "--target", "S11", "--eps", ""]) == EXIT_USAGE
    assert main(["conjecture", "--t", "2", "--n-max", "10"]) == EXIT_USAGE
    assert main([]) == EXIT_USAGE
    capsys.readouterr()


def test_main_budget_exit(tmp_path, capsys):
    # the projection (via the counting series) trips before any enumeration
    code = main(["census", "--class", "r2", "--n-max", "400", "--t-max", "1",
                 "--out", str(tmp_path / "big.csv")])
    assert code == EXIT_BUDGET
    assert "ceiling" in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "hooklab", "crossover", "--pair", "r-t1", "--n-max", "30"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == EXIT_OK
    assert "first_hold" in proc.stdout


def test_main_crossover_and_tables(capsys):
    assert main(["crossover", "--pair", "g-t1", "--n-max", "60", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["pair"] == "g-t1" and payload["first_hold"] is not None

    assert main(["ratios", "--pair", "g2-cross", "--checkpoints", "50,100"]) == EXIT_OK
    assert "limit" in capsys.readouterr().out

    assert main(["asym", "--target", "H11", "--eps", "0.05,0.02"]) == EXIT_OK
    assert "monotone approach to 1: yes" in capsys.readouterr().out

    assert main(["conjecture", "--t", "3", "--n-max", "25", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert {s["pair"] for s in payload["scans"]} == {"r", "g"}
