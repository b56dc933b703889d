"""CLI behavior: subcommands, exit codes, and the env-var logging knob."""

import json
import subprocess
import sys

from popcoin_sim.cli import main

CONFIG = {
    "policy": {"basic_income": 2922, "demurrage_alpha": 0.02},
    "epochs": 3,
    "population": {"kind": "fixed", "N": 4},
    "seed": 1,
    "transfers": {"count_per_epoch": 1, "max_fraction": 0.25},
    "outputs": [{"study": "supply"}],
}


def write_json(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def test_run_and_validate_happy_path(tmp_path, capsys):
    config = write_json(tmp_path / "cfg.json", CONFIG)
    assert main(["validate", config]) == 0
    assert "valid" in capsys.readouterr().out
    assert main(["run", config, "--out", str(tmp_path / "out")]) == 0
    assert (tmp_path / "out" / "epochs.csv").exists()
    assert (tmp_path / "out" / "supply.csv").exists()


def test_validate_bad_config_exits_2(tmp_path, capsys):
    bad = json.loads(json.dumps(CONFIG))
    bad["policy"]["demurrage_alpha"] = 2.0
    config = write_json(tmp_path / "bad.json", bad)
    assert main(["validate", config]) == 2
    assert "demurrage_alpha" in capsys.readouterr().err


def test_run_bad_config_exits_2(tmp_path, capsys):
    bad = json.loads(json.dumps(CONFIG))
    del bad["population"]
    config = write_json(tmp_path / "bad.json", bad)
    assert main(["run", config, "--out", str(tmp_path / "out")]) == 2
    assert "population" in capsys.readouterr().err


def test_missing_file_exits_2(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.json")]) == 2
    assert "not found" in capsys.readouterr().err


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{", encoding="utf-8")
    assert main(["validate", str(path)]) == 2
    assert "JSON" in capsys.readouterr().err


def test_agent_batch_to_stdout(tmp_path, capsys):
    problems = [
        {"basic_income": 10.0, "earned_income": 0.0, "interest_rate": -0.02},
        {"basic_income": 10.0, "earned_income": 100.0, "interest_rate": -0.02},
    ]
    path = write_json(tmp_path / "problems.json", problems)
    assert main(["agent", path, "--alpha", "0.02"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "in1,out1,savings,tax_rate"
    assert len(out) == 3
    assert float(out[1].split(",")[3]) == 0.0


def test_agent_accepts_wrapped_input_and_writes_file(tmp_path, capsys):
    doc = {
        "demurrage_alpha": 0.02,
        "problems": [{"basic_income": 5.0, "earned_income": 20.0, "interest_rate": -0.02}],
    }
    path = write_json(tmp_path / "problems.json", doc)
    out_file = tmp_path / "agent.csv"
    assert main(["agent", path, "--out", str(out_file)]) == 0
    lines = out_file.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "in1,out1,savings,tax_rate"
    assert len(lines) == 2


def test_agent_rejects_bad_problem(tmp_path, capsys):
    path = write_json(tmp_path / "problems.json", [{"basic_income": -1}])
    assert main(["agent", path]) == 2
    assert "basic_income" in capsys.readouterr().err


def test_exchange_grid_to_dir(tmp_path):
    doc = {"fiat_supply_shocks": [0.0, 0.1], "elasticities": [1.0]}
    path = write_json(tmp_path / "scen.json", doc)
    assert main(["exchange", path, "--out", str(tmp_path / "ex")]) == 0
    summary = json.loads((tmp_path / "ex" / "exchange_summary.json").read_text())
    assert summary["cases"] == 2
    assert summary["all_positive_shocks_overshoot"] is True


def test_exchange_invariant_violation_exits_3(tmp_path, capsys):
    # policy-side rate below the post-shock fiat rate breaks the ordering
    doc = {
        "scenario": {"money_supply_pop": 1.1},
        "fiat_supply_shocks": [0.01],
        "elasticities": [1.0],
    }
    path = write_json(tmp_path / "scen.json", doc)
    assert main(["exchange", path]) == 3
    assert "invariant" in capsys.readouterr().err.lower()


def test_exchange_rejects_policy_shock_key(tmp_path, capsys):
    doc = {"pop_supply_shocks": [0.1]}
    path = write_json(tmp_path / "scen.json", doc)
    assert main(["exchange", path]) == 2
    assert "census-determined" in capsys.readouterr().err


def test_log_env_var_controls_verbosity(tmp_path):
    config = write_json(tmp_path / "cfg.json", CONFIG)
    quiet = subprocess.run(
        [sys.executable, "-m", "popcoin_sim.cli", "run", config, "--out", str(tmp_path / "q")],
        capture_output=True,
        text=True,
        env={"PATH": "", "POPCOIN_SIM_LOG": "warning"},
    )
    chatty = subprocess.run(
        [sys.executable, "-m", "popcoin_sim.cli", "run", config, "--out", str(tmp_path / "v")],
        capture_output=True,
        text=True,
        env={"PATH": "", "POPCOIN_SIM_LOG": "info"},
    )
    assert quiet.returncode == 0 and chatty.returncode == 0
    assert "run complete" not in quiet.stderr
    assert "run complete" in chatty.stderr
    # verbosity must not change the artifacts
    assert (tmp_path / "q" / "epochs.csv").read_bytes() == (
        tmp_path / "v" / "epochs.csv"
    ).read_bytes()
