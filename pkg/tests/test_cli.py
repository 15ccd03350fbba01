"""Command line surface: formats, exit codes, config, determinism."""

import json

import pytest

import dispbound.cli as cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_psi_table_format(capsys):
    code, out, _ = run(["psi", "--n", "2"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["idx", "word", "class"]
    assert len(lines) == 30


def test_psi_json_format(capsys):
    code, out, _ = run(["psi", "--n", "2", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 2
    assert len(doc["entries"]) == 28


def test_psi_csv_format(capsys):
    code, out, _ = run(["psi", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "idx,word,class"
    assert len(lines) == 29


def test_psi_output_is_deterministic(capsys):
    _, first, _ = run(["psi", "--format", "json"], capsys)
    _, second, _ = run(["psi", "--format", "json"], capsys)
    assert first == second


def test_rank_below_two_is_a_usage_error(capsys):
    code, _, err = run(["psi", "--n", "1"], capsys)
    assert code == 2
    assert "error" in err


def test_unknown_format_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["psi", "--format", "yaml"])
    assert exc.value.code == 2


def test_relations_grouped_by_cancellation(capsys):
    code, out, _ = run(["relations", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 61
    cancels = [int(line.split(",")[2]) for line in lines[1:]]
    assert cancels == sorted(cancels, reverse=True)
    assert cancels[0] == 3 and cancels[-1] == 1


def test_relations_check_passes(capsys):
    code, out, _ = run(["relations", "--check", "--format", "json"], capsys)
    assert code == 0
    assert len(json.loads(out)["relations"]) == 60


def test_solve_analytic_report(capsys):
    code, out, _ = run(["solve", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)["analytic"]
    assert doc["alpha"] == pytest.approx(24.8692, abs=1e-4)
    assert doc["half_log"] == pytest.approx(1.6068, abs=1e-4)
    assert doc["bound"] == pytest.approx(1.5937, abs=1e-4)


def test_solve_both_routes_agree(capsys):
    code, out, _ = run(
        ["solve", "--method", "both", "--iters", "20000", "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["agreement"] < 1e-4
    assert doc["within_tol"] is True
    assert doc["numeric"]["value"] == pytest.approx(doc["analytic"]["alpha"], abs=1e-4)


def test_audit_worked_example(capsys):
    code, out, _ = run(
        [
            "audit",
            "--xi", "2,0,0,0,0,0,0.5,0",
            "--eta", "1,0,1,0,1,0,2,0",
            "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 1
    assert doc["reports"][0]["jorgensen"] == pytest.approx(4.5, abs=1e-9)


def test_audit_commuting_pair_is_an_input_error(capsys):
    code, _, err = run(
        [
            "audit",
            "--xi", "2,0,0,0,0,0,0.5,0",
            "--eta", "4,0,0,0,0,0,0.25,0",
            "--format", "json",
        ],
        capsys,
    )
    assert code == 2
    assert "error" in err


def test_audit_sampled_pairs_pass(capsys):
    code, out, _ = run(
        ["audit", "--schottky", "--count", "3", "--seed", "5", "--format", "json"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 3
    assert doc["failures"] == 0
    assert all(p["certified"] for p in doc["reports"])
    assert all(p["bound"] for p in doc["reports"])


def test_audit_flags_a_reported_counterexample(monkeypatch, capsys):
    # The failure exit is the counterexample path. Sound pairs never reach
    # it, so the counting rule is exercised with a doctored report.
    real = cli.audit_pair

    def doctored(x, y, alpha=None):
        report = real(x, y, alpha=alpha)
        report["hypothesis"] = True
        report["bound"] = False
        return report

    monkeypatch.setattr(cli, "audit_pair", doctored)
    code, out, _ = run(
        ["audit", "--schottky", "--count", "1", "--format", "json"], capsys
    )
    assert code == 1
    assert json.loads(out)["failures"] == 1


def test_audit_counts_only_certified_pairs(monkeypatch, capsys):
    real = cli.audit_pair

    def doctored(x, y, alpha=None):
        report = real(x, y, alpha=alpha)
        report["hypothesis"] = True
        report["bound"] = False
        return report

    monkeypatch.setattr(cli, "audit_pair", doctored)
    # The diagonal first map has no isometric circle, so the pair is not
    # certified and the doctored report cannot count as a failure.
    code, _, _ = run(
        [
            "audit",
            "--xi", "2,0,0,0,0,0,0.5,0",
            "--eta", "1,0,1,0,1,0,2,0",
            "--format", "json",
        ],
        capsys,
    )
    assert code == 0


def test_config_file_sets_defaults_and_flags_override(tmp_path, capsys):
    cfg = tmp_path / "run.toml"
    cfg.write_text('n = 2\nformat = "csv"\n\n[tolerances]\nminmax = 1e-5\n')
    _, out, _ = run(["psi", "--config", str(cfg)], capsys)
    assert out.splitlines()[0] == "idx,word,class"
    _, out, _ = run(["psi", "--config", str(cfg), "--format", "table"], capsys)
    assert out.split()[:3] == ["idx", "word", "class"]


def test_output_flag_writes_a_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(
        ["psi", "--format", "json", "--output", str(target)], capsys
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["n"] == 2


def test_missing_config_is_a_usage_error(capsys):
    code, _, err = run(["psi", "--config", "/nonexistent/run.toml"], capsys)
    assert code == 2
    assert "error" in err


def test_verify_relations_suite(capsys):
    code, out, _ = run(["verify", "--suite", "relations", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["id"] for c in doc["checks"]] == [1, 2]
    for check in doc["checks"]:
        assert check["passed"]
        for row in check["rows"]:
            assert row["ok"]
            if row.get("timing"):
                assert row["got"] is None
