"""Command line behavior: report structure, determinism, exit codes, and
the golden-diff harness."""
import json
import shutil

import pytest

import qproduct.cli as cli
from qproduct.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def strip_time(payload: dict) -> dict:
    payload = dict(payload)
    payload.pop("generated_at", None)
    return payload


def test_field_verb(capsys):
    code, payload = run_json(capsys, "field", "--q", "8")
    assert code == 0
    assert payload["report"]["field"]["modulus"] == "x^3 + x + 1"
    assert payload["tool"] == "qproduct"


def test_build_verb_reports_distance_and_flags(capsys):
    code, payload = run_json(capsys, "build", "--code", "hamming_dual(3,2)")
    assert code == 0
    rep = payload["report"]["code"]
    assert rep["dimension"] == 3 and rep["length"] == 7
    assert rep["distance"]["lower"] == 4 and rep["distance"]["exact"]
    assert rep["self_orthogonal"]["euclidean"] is True
    assert rep["field_spec"]["modulus"] == "x + 1"


def test_build_from_matrix_file(capsys, tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("2 2 3\n1 0 1\n0 1 1\n")
    code, payload = run_json(capsys, "build", "--matrix-file", str(path))
    assert code == 0
    assert payload["report"]["code"]["dimension"] == 2


def test_dual_verb(capsys):
    code, payload = run_json(capsys, "dual", "--code", "quaternary_hamming_dual_5",
                             "--kind", "hermitian")
    assert code == 0
    rep = payload["report"]
    assert rep["dual"]["dimension"] == 3
    assert rep["dual"]["distance"]["lower"] == 3


def test_distance_verb_with_flags(capsys):
    code, payload = run_json(capsys, "distance", "--code",
                             "dual(product(hamming_dual(3,2), hamming_dual(3,2)))",
                             "--budget", "100", "--threads", "2")
    assert code == 0
    cert = payload["report"]["distance"]
    assert cert["exact"] and cert["lower"] == 3
    assert cert["lower_method"] == "column-independence"


def test_product_verb_conformance(capsys):
    code, payload = run_json(capsys, "product", "--code1", "hamming_dual(3,2)",
                             "--code2", "hamming_dual(3,2)")
    assert code == 0
    rep = payload["report"]
    assert rep["claimed_distance"] == 16
    assert rep["product"]["distance"]["lower"] == 16
    conf = rep["conformance"]
    assert conf["dual_generator_matches"] is True
    assert conf["dual_dimension"] == 40
    assert conf["dual_distance"]["lower"] == 3
    assert conf["dual_distance_ceiling"] == 3
    assert rep["self_orthogonality_transfer"] is True


def test_product_additive_verb(capsys):
    code, payload = run_json(capsys, "product-additive", "--code1", "simplex(2,2)",
                             "--code2", "additive(quaternary_hamming_dual_5)")
    assert code == 0
    rep = payload["report"]
    assert rep["product"]["log_p_size"] == 8
    assert rep["conformance"]["dual_dimension"] == 22
    assert rep["self_orthogonality_transfer"] is True


def test_spectrum_verb(capsys):
    code, payload = run_json(capsys, "spectrum", "--code1", "rs(8,3)",
                             "--code2", "rs(8,4)", "--dual")
    assert code == 0
    rep = payload["report"]
    assert len(rep["support"]) == 7
    assert rep["free_positions"] == 20
    first_data_row = rep["support"][-1].split()
    assert first_data_row[:2] == ["0", "0"]  # vertical stripe of width 2
    assert len(rep["dual_support"]) == 7


def test_qecc_css_verb(capsys):
    code, payload = run_json(capsys, "qecc", "--construction", "css", "--code",
                             "product(hamming_dual(3,2), hamming_dual(3,2))")
    assert code == 0
    q = payload["report"]["qecc"]
    assert (q["n"], q["k"], q["alphabet"]) == (49, 31, 2)
    assert q["distance"]["lower"] == 3 and q["distance"]["exact"]


def test_qecc_rs_product_verb(capsys):
    code, payload = run_json(capsys, "qecc", "--construction", "rs-product",
                             "--q", "5", "--mu1", "1", "--mu2", "1")
    assert code == 0
    rep = payload["report"]
    assert (rep["qecc"]["n"], rep["qecc"]["k"]) == (16, 14)
    assert rep["rate_comparison"]["product_construction_wins"] is True
    assert rep["predicted"]["expected_dual_distance"] == 2


def test_conv_build_verb(capsys):
    code, payload = run_json(capsys, "conv", "build", "--code1", "hamming_dual(3,2)",
                             "--code2", "hamming_dual(3,2)", "--t", "1")
    assert code == 0
    band = payload["report"]["band"]
    assert band["frame"] == 42 and band["overlap"] == 7
    assert band["self_orthogonal_band"] is True
    assert band["window_factorization"] is True
    assert payload["report"]["band"]["free_distance_upper_bound"] == 3


def test_conv_check_verb(capsys):
    code, payload = run_json(capsys, "conv", "check", "--code1", "hamming_dual(3,2)",
                             "--code2", "hamming_dual(3,2)", "--t", "2")
    assert code == 0
    assert payload["report"]["window_pairwise_orthogonal"] is True


def test_conv_tailbite_verb(capsys):
    code, payload = run_json(capsys, "conv", "tailbite", "--code1", "hamming_dual(3,2)",
                             "--code2", "hamming_dual(3,2)", "--t", "1", "--blocks", "2")
    assert code == 0
    rep = payload["report"]
    assert rep["rank"] == 18 and not rep["rank_deficient"]
    assert (rep["qecc"]["n"], rep["qecc"]["k"]) == (84, 48)


def test_error_exit_is_structured(capsys):
    code, payload = run_json(capsys, "build", "--code", "no_such_code(1)")
    assert code == 1
    assert "error" in payload and "catalog" in payload["error"]["message"]


def test_usage_error_without_sources(capsys):
    code, payload = run_json(capsys, "build")
    assert code == 1
    assert "error" in payload


def test_empty_invocation_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_reports_are_deterministic(capsys):
    _, first = run_json(capsys, "build", "--code", "rs(5,3)")
    _, second = run_json(capsys, "build", "--code", "rs(5,3)")
    assert strip_time(first) == strip_time(second)


def test_reports_independent_of_threads(capsys):
    _, one = run_json(capsys, "distance", "--code", "rs(8,4)", "--threads", "1")
    _, four = run_json(capsys, "distance", "--code", "rs(8,4)", "--threads", "4")
    one["invocation"] = four["invocation"] = []
    assert strip_time(one) == strip_time(four)


def test_out_flag_writes_file(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, stdout = run_cli(capsys, "field", "--q", "4", "--out", str(out))
    assert code == 0 and stdout == ""
    payload = json.loads(out.read_text())
    assert payload["report"]["field"]["q"] == 4


def test_pretty_rendering(capsys):
    code, out = run_cli(capsys, "field", "--q", "9", "--pretty")
    assert code == 0
    assert "modulus: x^2 + 2*x + 2" in out


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("QPRODUCT_BUDGET", "10")
    code, payload = run_json(capsys, "distance", "--code", "rs(8,4)")
    assert code == 0
    assert payload["report"]["distance"]["lower_method"] == "column-independence"


def test_reproduce_paper_passes(capsys):
    code, payload = run_json(capsys, "reproduce-paper")
    assert code == 0
    rep = payload["report"]
    assert rep["ok"] and not rep["failed"]
    assert set(rep["passed"]) == set(rep["pipelines"])


def test_reproduce_paper_detects_corruption(capsys, tmp_path, monkeypatch):
    golden = tmp_path / "golden"
    shutil.copytree(cli._golden_dir(), golden)
    target = golden / "hamming-dual-chain.json"
    payload = json.loads(target.read_text())
    payload["qecc"]["k"] = 2
    target.write_text(json.dumps(payload, indent=2, sort_keys=True))
    monkeypatch.setattr(cli, "_golden_dir", lambda: golden)
    code, out = run_json(capsys, "reproduce-paper")
    assert code == 1
    failed = out["report"]["failed"]
    assert list(failed) == ["hamming-dual-chain"]
    assert any("/qecc/k" in d for d in failed["hamming-dual-chain"])
