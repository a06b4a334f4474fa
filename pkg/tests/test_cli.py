import json
import os

import pytest

from dihedralkit.cli import main
from dihedralkit.gf2 import BitMatrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_word_lq_example(capsys):
    code, out, _ = run_cli(capsys, "word", "lq", "--q", "2", "--word", "a")
    assert code == 0
    assert out.strip() == "a- b- a- b a"


def test_word_rq_and_omega2(capsys):
    code, out, _ = run_cli(capsys, "word", "rq", "--q", "2", "--word", "a")
    assert out.strip() == "a b- a b a"
    code, out, _ = run_cli(capsys, "word", "omega2", "--q", "2", "--word", "a")
    assert out.strip() == "a- b- a- b a b- a b a"


def test_word_validate_exit_codes(capsys):
    code, _, _ = run_cli(capsys, "word", "validate", "--q", "2", "--word", "a b- a b a-")
    assert code == 0
    code, _, _ = run_cli(capsys, "word", "validate", "--q", "2", "--word", "a b a b")
    assert code == 1


def test_build_string_paper_fixture(capsys):
    code, out, _ = run_cli(capsys, "module", "build-string", "--q", "2", "--word", "a b- a b a-", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["x"]["data"] == ["100000", "110000", "001000", "001100", "000011", "000001"]
    assert payload["y"]["data"] == ["100000", "011000", "001000", "000100", "000110", "000001"]


def test_module_json_roundtrip_through_subcommands(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "module", "build-string", "--q", "2", "--word", "a b- a", "--format", "json")
    rep_file = tmp_path / "rep.json"
    rep_file.write_text(out)
    code, out, _ = run_cli(capsys, "module", "dual", "--rep", str(rep_file), "--format", "json")
    assert code == 0
    dual_payload = json.loads(out)
    assert dual_payload["q"] == 2
    code, out, _ = run_cli(capsys, "decompose", "--rep", str(rep_file), "--format", "json")
    assert code == 0
    dec = json.loads(out)
    assert dec["summands"][0]["tag"]["kind"] == "string"
    code, out, _ = run_cli(capsys, "module", "restrict", "--rep", str(rep_file), "--subgroup", "kleiny", "--format", "json")
    assert code == 0


def test_signature_command(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "module", "build-string", "--q", "2", "--word", "a", "--format", "json")
    rep_file = tmp_path / "ma.json"
    rep_file.write_text(out)
    code, out, _ = run_cli(capsys, "signature", "--rep", str(rep_file), "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["signature"] == [0, 0]
    assert payload["active"] == "kleiny"


def test_quiver_sweep_dot(capsys):
    code, out, _ = run_cli(capsys, "quiver", "sweep", "--q", "2", "--word", "a", "--radius", "1", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert out.count("{") == out.count("}")


def test_quiver_sweep_json_out_file(capsys, tmp_path):
    out_file = tmp_path / "sweep.json"
    code, _, _ = run_cli(
        capsys, "quiver", "sweep", "--q", "2", "--word", "a b- a", "--radius", "1", "--format", "json", "--out", str(out_file)
    )
    assert code == 0
    payload = json.loads(out_file.read_text())
    assert payload["pattern"] == "i"


def test_verify_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "fixpoints", "--q", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["passed"] is True
    code, _, err = run_cli(capsys, "verify", "--suite", "nonsense", "--q", "2")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["word"])  # missing operation
    assert exc.value.code == 2


def test_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("DIHEDRAL_SEED", "17")
    code, out, _ = run_cli(capsys, "verify", "--suite", "fixpoints", "--q", "2", "--format", "json")
    assert json.loads(out)["seed"] == 17


def test_band_build(capsys):
    phi = json.dumps(BitMatrix.identity(1).to_json())
    code, out, _ = run_cli(capsys, "module", "build-band", "--q", "2", "--word", "a b-", "--phi", phi, "--format", "json")
    assert code == 0
    assert json.loads(out)["x"]["rows"] == 2


def test_algebraic_probe_cli(capsys):
    code, out, _ = run_cli(capsys, "algebraic", "probe", "--q", "2", "--seed-spec", "ky-induced", "--format", "json")
    assert code == 0
    assert json.loads(out)["verdict"] == "closed"


def test_induce_cli(capsys):
    code, out, _ = run_cli(capsys, "module", "induce", "--q", "2", "--subgroup", "kleiny", "--omega-k", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["x"]["rows"] == 2
