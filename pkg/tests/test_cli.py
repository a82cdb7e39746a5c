"""Command-line interface tests: exit codes, provenance, determinism."""

import json
import math

import pytest

from quench_patterns import cli


def run(argv):
    return cli.main(argv)


def test_front1d_happy_path(tmp_path):
    out = tmp_path / "front.csv"
    code = run(["front1d", "--c", "1.0", "--M", "10", "--L", "10",
                "--h", "0.05", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# quench-patterns front1d ")
    assert "--c 1" in lines[0]
    assert lines[1] == "x,u"
    assert len(lines) == 2 + 400


def test_front1d_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["front1d", "--c", "0.5", "--M", "10", "--L", "10",
            "--h", "0.05"]
    assert run(argv + ["--out", str(a)]) == 0
    assert run(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_front1d_stdout(capsys):
    assert run(["front1d", "--c", "1.0", "--M", "5", "--L", "5",
                "--h", "0.1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("# quench-patterns front1d ")


def test_missing_required_flag():
    assert run(["front1d", "--M", "10"]) == 2


def test_unknown_flag():
    assert run(["front1d", "--c", "1.0", "--warp", "9"]) == 2


def test_no_subcommand():
    assert run([]) == 2


def test_strip_rejects_out_of_range_speed(tmp_path):
    out = tmp_path / "strip.csv"
    assert run(["strip", "--c", "5", "--kappa", "7",
                "--out", str(out)]) == 2
    assert not out.exists()


def test_dichotomy_inconclusive_exit_code(tmp_path):
    out = tmp_path / "verdict.json"
    code = run(["dichotomy", "--c", "2.0", "--h", "0.05",
                "--out", str(out)])
    assert code == 4
    lines = out.read_text().splitlines()
    assert lines[0].startswith("# quench-patterns dichotomy ")
    payload = json.loads("\n".join(lines[1:]))
    assert payload["verdict"] == "inconclusive"


def test_dichotomy_nontrivial_exit_code(tmp_path):
    out = tmp_path / "verdict.json"
    code = run(["dichotomy", "--c", "1.0", "--h", "0.05",
                "--out", str(out)])
    assert code == 0
    payload = json.loads("\n".join(out.read_text().splitlines()[1:]))
    assert payload["verdict"] == "nontrivial"
    assert payload["wake_amplitude"] > 0.99


def test_version(capsys):
    assert run(["--version"]) == 0
    assert "quench-patterns" in capsys.readouterr().out


def test_config_defaults_and_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"c": 0.8, "M": 10, "L": 10, "h": 0.05}))
    out = tmp_path / "a.csv"
    assert run(["front1d", "--config", str(cfg), "--out", str(out)]) == 0
    assert "--c 0.8" in out.read_text().splitlines()[0]
    # an explicit flag beats the config value
    out2 = tmp_path / "b.csv"
    assert run(["front1d", "--config", str(cfg), "--c", "1.2",
                "--out", str(out2)]) == 0
    assert "--c 1.2" in out2.read_text().splitlines()[0]


def test_config_errors(tmp_path):
    assert run(["front1d", "--c", "1.0",
                "--config", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2, 3]")
    assert run(["front1d", "--c", "1.0", "--config", str(bad)]) == 2


def test_periodic(tmp_path):
    out = tmp_path / "orbit.csv"
    assert run(["periodic", "--kappa", str(2 * math.pi),
                "--n-cells", "101", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[1] == "x,u"
    assert len(lines) == 2 + 101


def test_wave(tmp_path):
    out = tmp_path / "wave.csv"
    assert run(["wave", "--d", "2.0", "--x-min", "-8", "--x-max", "4",
                "--h", "0.05", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0].startswith(
        "# quench-patterns wave ")


def test_subsolution_both_modes(tmp_path):
    base = ["subsolution", "--c", "0.5", "--d", "1.9", "--alpha", "0.3",
            "--kappa", str(2 * math.pi), "--M", "10", "--h", "0.1"]
    out = tmp_path / "sub.csv"
    assert run(base + ["--mode", "exist", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[1] == "x,y,u"
    out2 = tmp_path / "super.csv"
    assert run(["subsolution", "--c", "1.9", "--d", "2.1", "--alpha",
                "0.5", "--kappa", str(2 * math.pi), "--M", "15",
                "--h", "0.1", "--mode", "nonexist",
                "--out", str(out2)]) == 0
    # invalid spec for the chosen mode is a usage error
    assert run(base + ["--mode", "nonexist"]) == 2


def test_sweep_predicted_only(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["sweep", "--c-min", "0.5", "--c-max", "2.1",
                "--c-steps", "2", "--kappa-min", "4", "--kappa-max", "8",
                "--kappa-steps", "2", "--kappa-inf",
                "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[1] == "c,kappa,P,predicted,measured,wake_amplitude"
    assert len(lines) == 2 + 6
    assert any(",inf," in ln for ln in lines[2:])
    assert all(ln.split(",")[4] == "not_run" for ln in lines[2:])


def test_evolve_1d_with_snapshots(tmp_path):
    out = tmp_path / "ev.csv"
    assert run(["evolve", "--c", "1.0", "--t-end", "0.5", "--dim", "1",
                "--M", "5", "--L", "5", "--h", "0.1",
                "--snapshot-every", "250", "--out", str(out)]) == 0
    assert out.exists()
    snaps = sorted(tmp_path.glob("ev_*.csv"))
    assert len(snaps) == 3                      # t = 0, 0.25, 0.5
    first = snaps[0].read_text().splitlines()[0]
    assert first.startswith("# quench-patterns evolve ") and "t=0" in first
