"""End-to-end tests of the command-line interface through run()."""
import io
import json

from treechild import GOLDEN_TC
from treechild.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def records(text: str) -> list:
    return [json.loads(line) for line in text.splitlines()]


def test_count_tc_record_shape():
    code, text = invoke("count", "tc", "--d", "2", "--n", "8", "--k", "7")
    assert code == 0
    (rec,) = records(text)
    assert rec == {
        "command": "count tc",
        "parameters": {"d": 2, "n": 8, "k": 7},
        "results": {"value": "8485564550400"},
        "method": "words",
    }


def test_count_tc_all_methods_agree():
    code, text = invoke("count", "tc", "--d", "3", "--n", "5", "--k", "2",
                        "--method", "all")
    assert code == 0
    recs = records(text)
    assert {r["method"] for r in recs} == {
        "words", "compgraph", "genfun", "closedform",
    }
    assert {r["results"]["value"] for r in recs} == {"291420"}


def test_count_tc_total_when_k_omitted():
    code, text = invoke("count", "tc", "--d", "2", "--n", "5")
    assert code == 0
    (rec,) = records(text)
    assert rec["results"]["value"] == str(sum(GOLDEN_TC[2][5]))


def test_count_otc_both_formulas():
    code, text = invoke("count", "otc", "--d", "2", "--n", "3", "--k", "1",
                        "--method", "all")
    assert code == 0
    recs = records(text)
    assert [r["method"] for r in recs] == ["closedform", "direct"]
    assert {r["results"]["value"] for r in recs} == {"18"}


def test_count_words_and_bruteforce():
    code, text = invoke("count", "words", "--d", "3", "--n", "2", "--k", "1",
                        "--method", "all")
    assert code == 0
    values = {r["results"]["value"] for r in records(text)}
    assert values == {"11"}


def test_table_csv_layout():
    code, text = invoke("table", "tc", "--d", "3", "--n-max", "4",
                        "--format", "csv")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "n,k=0,k=1,k=2,k=3"
    assert lines[-1] == "4,15,492,7908,55320"


def test_table_json_rows():
    code, text = invoke("table", "tc", "--d", "2", "--n-max", "3")
    assert code == 0
    recs = records(text)
    assert recs[-1]["results"]["counts"] == ["3", "21", "42"]


def test_dist_masses_and_comparison():
    code, text = invoke("dist", "ret", "--family", "general", "--d", "2",
                        "--n", "6", "--compare", "poisson")
    assert code == 0
    (rec,) = records(text)
    mass = rec["results"]["mass"]
    total = sum(
        int(v["numerator"]) / int(v["denominator"]) for v in mass.values()
    )
    assert abs(total - 1) < 1e-12
    assert 0.018 < rec["results"]["tv_to_poisson_half"] < 0.021


def test_dist_normal_gap_requires_d2():
    code, _ = invoke("dist", "ret", "--family", "onecomp", "--d", "3",
                     "--n", "10", "--compare", "normal")
    assert code == 2
    code, text = invoke("dist", "ret", "--family", "onecomp", "--d", "2",
                        "--n", "10", "--compare", "normal")
    assert code == 0
    (rec,) = records(text)
    assert rec["results"]["normal_sup_gap"] > 0


def test_asymp_params_record():
    code, text = invoke("asymp", "params", "--d", "6")
    assert code == 0
    (rec,) = records(text)
    assert rec["results"]["gamma"] == {"numerator": "16807", "denominator": "30"}
    assert rec["results"]["alpha"] == {"numerator": "-51", "denominator": "7"}


def test_asymp_estimate_has_magnitude_fields():
    code, text = invoke("asymp", "otc", "--d", "2", "--n", "50")
    assert code == 0
    (rec,) = records(text)
    est = rec["results"]["estimate"]
    assert set(est) == {"ln", "log10", "mantissa", "exponent10"}
    assert 1 <= est["mantissa"] < 10


def test_asymp_requires_n_for_estimates():
    code, _ = invoke("asymp", "otc", "--d", "2")
    assert code == 2


def test_verify_suite_passes():
    code, text = invoke("verify", "--suite", "sackin", "--n-max", "6")
    assert code == 0
    recs = records(text)
    assert recs
    assert all(r["results"]["passed"] for r in recs)


def test_usage_errors_exit_2():
    assert invoke("count", "tc", "--d", "1", "--n", "3")[0] == 2
    assert invoke("count", "tc", "--d", "2", "--n", "3", "--k", "5")[0] == 2
    assert invoke("count", "words", "--d", "2", "--n", "3")[0] == 2
    assert invoke("count", "tc", "--d", "2", "--n", "3", "--k", "1",
                  "--method", "nope")[0] == 2
    assert invoke("nonsense")[0] == 2


def test_word_ceiling_env_override(monkeypatch):
    monkeypatch.setenv("TREECHILD_WORD_CEILING", "3")
    code, _ = invoke("count", "words", "--d", "2", "--n", "4", "--k", "0",
                     "--method", "bruteforce")
    assert code == 2
    monkeypatch.setenv("TREECHILD_WORD_CEILING", "8")
    code, text = invoke("count", "words", "--d", "2", "--n", "4", "--k", "0",
                        "--method", "bruteforce")
    assert code == 0
    monkeypatch.setenv("TREECHILD_WORD_CEILING", "zebra")
    code, _ = invoke("count", "words", "--d", "2", "--n", "4", "--k", "0",
                     "--method", "bruteforce")
    assert code == 2


def test_records_round_trip_as_json_lines():
    _, text = invoke("verify", "--suite", "golden-tables", "--d", "2")
    for line in text.splitlines():
        rec = json.loads(line)
        assert set(rec) == {"command", "parameters", "results", "method"}
