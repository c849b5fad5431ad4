import json

import pytest

from halflattice.cli import main
from halflattice.suites import SUITES, SuiteConfig, SuiteReport


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def charge_doc(charge):
    return {"terms": [{"coeff": "1", "fock": [], "charge": list(charge)}]}


def test_eval_product(tmp_path, capsys):
    u = write(tmp_path, "u.json", charge_doc((1, 0)))
    v = write(tmp_path, "v.json", charge_doc((0, 1)))
    assert main(["--json", "eval", "product", u, "-2", v]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"terms": [{"charge": [1, 1], "coeff": "1", "fock": [[0, 1]]}]}


def test_eval_zhu_emits_raw_and_reduced(tmp_path, capsys):
    u = write(tmp_path, "u.json", {"terms": [{"coeff": "1", "fock": [[2, 1]], "charge": [0, 0]}]})
    v = write(tmp_path, "v.json", charge_doc((1, 0)))
    assert main(["--json", "eval", "zhu", u, v]) == 0
    out = json.loads(capsys.readouterr().out)
    assert set(out) == {"raw", "reduced"}
    assert len(out["raw"]["terms"]) == 2


def test_eval_act_on_omega(tmp_path, capsys):
    x = write(tmp_path, "x.json", {"words": [{"coeff": "1", "factors": [{"d": 1}]}]})
    f = write(tmp_path, "f.json", [{"coeff": "1", "exponents": [1, 0]}])
    module = write(
        tmp_path, "w.json",
        {"kind": "omega", "mu": 2, "f": [[{"coeff": "1", "exponents": [1, 0]}]], "a": ["2"]},
    )
    assert main(["--json", "eval", "act", x, f, "--module", module]) == 0
    out = json.loads(capsys.readouterr().out)
    # degree action on t1: t1 + t1^2
    assert out == [
        {"coeff": "1", "exponents": [1, 0]},
        {"coeff": "1", "exponents": [2, 0]},
    ]


def test_eval_act_on_weight(tmp_path, capsys):
    x = write(tmp_path, "x.json", {"words": [{"coeff": "1", "factors": [{"e": [0, 1]}]}]})
    m = write(tmp_path, "m.json", [{"coeff": "1", "point": ["1/2", "0"]}])
    module = write(tmp_path, "w.json", {"kind": "weight", "lambda0": ["1/2", "0"]})
    assert main(["--json", "eval", "act", x, m, "--module", module]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == [{"coeff": "1", "point": ["1/2", "1"]}]


def test_decide_iso(tmp_path, capsys):
    s1 = write(tmp_path, "s1.json", {"mu": 2, "f": [[{"coeff": "1", "exponents": [1, 0]}]], "a": ["2"]})
    s2 = write(
        tmp_path, "s2.json",
        {"mu": 2,
         "f": [[{"coeff": "1", "exponents": [1, 0]}, {"coeff": "3", "exponents": [0, 0]}]],
         "a": ["2"]},
    )
    assert main(["--json", "decide", "iso", s1, s2]) == 0
    assert json.loads(capsys.readouterr().out) == {"isomorphic": True, "shifts": [3]}
    s3 = write(tmp_path, "s3.json", {"mu": 2, "f": [[{"coeff": "1", "exponents": [1, 0]}]], "a": ["7"]})
    assert main(["--json", "decide", "iso", s1, s3]) == 0
    assert json.loads(capsys.readouterr().out) == {"isomorphic": False, "shifts": None}


def test_decide_amodule(tmp_path, capsys):
    good = write(
        tmp_path, "good.json",
        {"mu": 3,
         "f": [[{"coeff": "1", "exponents": [1, 1]}], [{"coeff": "1", "exponents": [1, 1]}]],
         "a": []},
    )
    assert main(["--json", "decide", "amodule", good]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["commuting"] and out["potential"] == [{"coeff": "1", "exponents": [1, 1]}]
    bad = write(
        tmp_path, "bad.json",
        {"mu": 3,
         "f": [[{"coeff": "1", "exponents": [0, 1]}], [{"coeff": "1", "exponents": [1, 0]}]],
         "a": []},
    )
    assert main(["--json", "decide", "amodule", bad]) == 0
    out = json.loads(capsys.readouterr().out)
    assert not out["commuting"] and out["failing_pair"] == [1, 2]


def test_witness_simplicity(tmp_path, capsys):
    spec = write(tmp_path, "s.json", {"mu": 2, "f": [[{"coeff": "1", "exponents": [1, 0]}]], "a": ["2"]})
    f = write(tmp_path, "f.json", [{"coeff": "1", "exponents": [1, 1]}])
    assert main(["--json", "witness", "simplicity", spec, f]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["replay_matches"] and out["result"] == "-1"
    assert [s["kind"] for s in out["steps"]] == ["derive", "difference"]


def test_verify_unknown_suite_is_input_error(capsys):
    assert main(["verify", "bogus"]) == 2
    assert "unknown suite" in capsys.readouterr().err


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    cfgfile = write(tmp_path, "c.json", {"probe_count": 10, "seed": 3})
    assert main(["--json", "--config", cfgfile, "verify", "omega-relations"]) == 0
    first = capsys.readouterr().out
    assert main(["--json", "--config", cfgfile, "verify", "omega-relations"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["failed"] == 0 and data["config"]["seed"] == 3


def test_verify_failure_exit_code(monkeypatch, capsys):
    def failing(config):
        report = SuiteReport("stub", {})
        report.add("always-fails", False, "residual-text")
        return report.finish()

    monkeypatch.setitem(SUITES, "stub", failing)
    assert main(["verify", "stub"]) == 1
    assert "FAIL always-fails" in capsys.readouterr().out


def test_schema_error_exit_code(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", {"terms": [{"coeff": "1", "fock": [], "charge": [1]}]})
    ok = write(tmp_path, "ok.json", charge_doc((0, 1)))
    assert main(["eval", "product", bad, "0", ok]) == 2
    assert "charge" in capsys.readouterr().err


def test_unknown_config_field_rejected(tmp_path, capsys):
    cfgfile = write(tmp_path, "c.json", {"probes": 5})
    assert main(["--config", cfgfile, "verify", "zhu"]) == 2
    assert "unknown config fields" in capsys.readouterr().err


def test_nu_k_overrides(tmp_path, capsys):
    u = write(tmp_path, "u.json", {"terms": [{"coeff": "1", "fock": [], "charge": [1]}]})
    v = write(tmp_path, "v.json", {"terms": [{"coeff": "1", "fock": [[1, 1]], "charge": [0]}]})
    # (e^{c1})_0 applied to the depth-one d-mode at nu=1, frozen from the
    # skew-symmetry relation u_0 v = -v_0 u with v_0 u = d1(0) e^{c1}
    assert main(["--nu", "1", "--json", "eval", "product", u, "0", v]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"terms": [{"charge": [1], "coeff": "-1", "fock": []}]}
