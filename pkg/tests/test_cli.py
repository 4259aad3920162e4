import json
import re
import subprocess
import sys

import pytest

from planetx.cli import main

pythonpath = None  # editable install puts planetx on sys.path for subprocesses


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_is_deterministic_across_processes(tmp_path):
    # Two fresh interpreters, one seed: identical manifests byte for byte.
    for name in ("one", "two"):
        result = subprocess.run(
            [sys.executable, "-m", "planetx.cli", "gen", "--seed", "321",
             "--out", str(tmp_path / name), "--robots", "30", "--ticks", "40"],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
    first = (tmp_path / "one" / "manifest.json").read_bytes()
    second = (tmp_path / "two" / "manifest.json").read_bytes()
    assert first == second


def test_gen_same_seed_same_hash(tmp_path, capsys):
    code_a, out_a, _ = run_cli(["gen", "--seed", "7", "--out", str(tmp_path / "a"),
                                "--robots", "20", "--ticks", "30"], capsys)
    code_b, out_b, _ = run_cli(["gen", "--seed", "7", "--out", str(tmp_path / "b"),
                                "--robots", "20", "--ticks", "30"], capsys)
    assert code_a == code_b == 0
    hash_a = re.search(r"sha256 (\w+)", out_a).group(1)
    hash_b = re.search(r"sha256 (\w+)", out_b).group(1)
    assert hash_a == hash_b


def test_gen_variant_flags(tmp_path, capsys):
    code, _, _ = run_cli(["gen", "--seed", "1", "--out", str(tmp_path / "v"),
                          "--robots", "20", "--ticks", "30",
                          "--variant", "nonpoly", "--variant", "late-expire"], capsys)
    assert code == 0
    manifest = json.loads((tmp_path / "v" / "manifest.json").read_text())
    assert manifest["config"]["nonpolynomial_series"] is True
    assert manifest["config"]["expiration_bias"] == "late_productive"


@pytest.fixture()
def match_dir(tmp_path, capsys):
    out = tmp_path / "match"
    code, _, _ = run_cli(["gen", "--seed", "99", "--out", str(out),
                          "--robots", "20", "--ticks", "30"], capsys)
    assert code == 0
    return out


def test_headless_prints_scores_and_writes_log(match_dir, tmp_path, capsys):
    log = tmp_path / "h.ndjson"
    code, out, _ = run_cli(["headless", "--match", str(match_dir),
                            "--bot-a", "omniscient:0", "--bot-b", "omniscient:20",
                            "--seed", "5", "--out", str(log)], capsys)
    assert code == 0
    assert "bot_a:" in out and "bot_b:" in out and "winner:" in out
    assert log.exists()


def test_replay_verifies_and_detects_tampering(match_dir, tmp_path, capsys):
    log = tmp_path / "r.ndjson"
    code, _, _ = run_cli(["headless", "--match", str(match_dir),
                          "--seed", "5", "--out", str(log)], capsys)
    assert code == 0

    code, out, _ = run_cli(["replay", "--log", str(log)], capsys)
    assert code == 0
    assert "reproduced" in out

    lines = log.read_text().splitlines()
    bid_index = next(i for i, line in enumerate(lines) if '"bid_submitted"' in line)
    doctored = json.loads(lines[bid_index])
    doctored["guess"] = (doctored["guess"] + 1) % 101
    lines[bid_index] = json.dumps(doctored, sort_keys=True, separators=(",", ":"))
    log.write_text("\n".join(lines) + "\n")

    code, _, err = run_cli(["replay", "--log", str(log)], capsys)
    assert code == 2
    assert "recorded" in err


def test_replay_with_explicit_match_dir(match_dir, tmp_path, capsys):
    log = tmp_path / "e.ndjson"
    run_cli(["headless", "--match", str(match_dir), "--seed", "2",
             "--out", str(log)], capsys)
    code, out, _ = run_cli(["replay", "--log", str(log),
                            "--match", str(match_dir)], capsys)
    assert code == 0


def test_replay_missing_log_is_runtime_failure(capsys):
    code, _, err = run_cli(["replay", "--log", "/nonexistent/file.ndjson"], capsys)
    assert code == 3
    assert "error" in err


def test_stats_totals_match_headless_scores(match_dir, tmp_path, capsys):
    log = tmp_path / "s.ndjson"
    code, head_out, _ = run_cli(["headless", "--match", str(match_dir),
                                 "--seed", "8", "--out", str(log)], capsys)
    head_scores = dict(re.findall(r"(bot_\w+): (-?[\d.]+)", head_out))

    code, out, err = run_cli(["stats", "--log", str(log)], capsys)
    assert code == 0
    assert "warning" not in err
    scores_block = out.split("final scores:")[1].split("robots claimed:")[0]
    stats_scores = dict(re.findall(r"(bot_\w+): (-?[\d.]+)", scores_block))
    for team, value in head_scores.items():
        assert float(stats_scores[team]) == pytest.approx(float(value), abs=1e-9)
    assert "resolution reasons:" in out
    assert "score trajectory" in out
    claimed = [int(n) for n in re.findall(r"  bot_\w+: (\d+)\n", out)]
    downed = int(re.search(r"powered down: (\d+)", out).group(1))
    assert sum(claimed) + downed == 20


def test_usage_errors_exit_one(capsys):
    assert main(["gen", "--seed", "not-an-int", "--out", "x"]) == 1
    assert main(["no-such-command"]) == 1
    assert main(["serve"]) == 1  # admin secret is required
    capsys.readouterr()


def test_bad_match_dir_is_runtime_failure(tmp_path, capsys):
    code, _, err = run_cli(["headless", "--match", str(tmp_path / "missing")], capsys)
    assert code == 3
