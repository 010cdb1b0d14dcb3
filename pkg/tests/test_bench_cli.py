import json
import subprocess
import sys

import pytest

from genalg import bench, cli
from genalg.config import (
    FatemanConfig,
    IdealBenchConfig,
    MinpolyBenchConfig,
    NFDetConfig,
    PearceConfig,
    ResultantTowerConfig,
    TorsionDemoConfig,
)
from genalg.ideals import ideal_norm
from genalg.poly.dense import resultant
from genalg.prng import SplitMix64


def test_fateman_small_and_checked():
    r = bench.cmd_fateman(FatemanConfig(n=1))
    assert r.fingerprint == "15" and r.oracle_checked


def test_pearce_edges():
    assert bench.cmd_pearce(PearceConfig(n=0)).fingerprint == "1"
    assert bench.cmd_pearce(PearceConfig(n=1)).oracle_checked


def test_resultant_tower_small():
    r = bench.cmd_resultant_tower(ResultantTowerConfig(e=1))
    assert r.oracle_checked
    s, _ = bench.tower_inputs(ResultantTowerConfig(e=1))
    assert resultant(s, s).is_zero()


def test_nf_det_small():
    M = bench.nf_det_matrix(NFDetConfig(dim=1))
    assert bench.cmd_nf_det(NFDetConfig(dim=1)).details["det"] == M.rows[0][0]
    assert bench.cmd_nf_det(NFDetConfig(dim=5)).oracle_checked


def test_ideal_bench_order_independent():
    cfg = IdealBenchConfig(count=1)
    O, sample = bench.ideal_bench_setup(cfg)
    assert bench.cmd_ideal(cfg).details["ideal"] == sample[0]
    cfg = IdealBenchConfig(count=30)
    O, sample = bench.ideal_bench_setup(cfg)
    fp = bench.cmd_ideal(cfg).fingerprint
    SplitMix64(1).shuffle(sample)
    A = sample[0]
    for P in sample[1:]:
        A = A * P
    assert str(ideal_norm(A, use_cache=False)) == fp


def test_minpoly_bench_degree():
    r = bench.cmd_minpoly(MinpolyBenchConfig(dim=10))
    assert r.fingerprint == "degree=5 verified=true"


def test_torsion_demo():
    assert bench.cmd_torsion_demo(TorsionDemoConfig()).fingerprint == "torsion, order 4"
    assert bench.cmd_torsion_demo(TorsionDemoConfig(elem="2")).fingerprint == "not torsion"


def test_reports_are_deterministic():
    for cmd, cfg in [
        (bench.cmd_nf_det, NFDetConfig(dim=6)),
        (bench.cmd_ideal, IdealBenchConfig(count=10)),
        (bench.cmd_minpoly, MinpolyBenchConfig(dim=8)),
    ]:
        assert cmd(cfg).fingerprint == cmd(cfg).fingerprint


def test_json_and_csv_carry_the_same_report():
    r = bench.cmd_fateman(FatemanConfig(n=2))
    a = bench.BenchReport.from_json(r.to_json())
    b = bench.BenchReport.from_csv(r.to_csv())
    assert a == b == bench.BenchReport(**r.to_dict())
    assert set(json.loads(r.to_json())) == {"name", "params", "seconds", "fingerprint", "oracle_checked"}


def test_cli_json_output(capsys):
    assert cli.main(["bench", "fateman", "--n", "3", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["fingerprint"] == "210" and out["oracle_checked"]


def test_cli_csv_and_text(capsys):
    assert cli.main(["demo", "torsion", "--field", "x^2+1", "--elem", "x", "--csv"]) == 0
    assert "torsion, order 4" in capsys.readouterr().out
    assert cli.main(["bench", "ideal", "--count", "5", "--seed", "11"]) == 0
    assert "oracle checked" in capsys.readouterr().out


def test_cli_scale_flag(capsys):
    assert cli.main(["bench", "fateman", "--n", "4", "--scale", "0.5", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["params"]["n"] == 2


def test_cli_oracle_failure_exit_code(monkeypatch, capsys):
    def broken(cfg):
        raise bench.OracleMismatch("forced mismatch")

    monkeypatch.setattr(bench, "cmd_fateman", broken)
    assert cli.main(["bench", "fateman", "--n", "1"]) == cli.EXIT_ORACLE
    assert "forced mismatch" in capsys.readouterr().err


def test_cli_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["bench", "nonsense"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "genalg", "bench", "pearce", "--n", "1", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["oracle_checked"] is True
