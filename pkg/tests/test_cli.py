import json

import pytest

from leflab import cli, harness
from leflab.harness import SweepConfig, run_verification, theory_failures
from leflab.oracle import ExponentSpec


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hilbert_output_exact(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--vars", "3", "--powers", "3,3,3,3")
    assert code == 0
    assert out == '{"hf":[1,3,6,6,3],"reg":4}\n'


def test_classify_output_exact(capsys):
    code, out, _ = run_cli(capsys, "classify", "--powers", "5,5,5,5,5,5", "--k", "3")
    assert code == 0
    assert out == '{"status":"fails","degrees":[6]}\n'
    code, out, _ = run_cli(capsys, "classify", "--powers", "2,3,4,5", "--k", "2")
    assert code == 0
    assert json.loads(out) == {"status": "maximal-everywhere", "degrees": []}


def test_linsys_output(capsys):
    code, out, _ = run_cli(capsys, "linsys", "--degree", "4", "--mults", "2,2,2,2,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["dim"] == 1
    assert doc["trace"][-1]["rule"] == "terminal"


def test_rank_output(capsys):
    code, out, _ = run_cli(capsys, "rank", "--powers", "3,3,3,3", "--k", "3", "--degree", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 2 and doc["kernel"] == 1 and doc["cokernel"] == 1
    assert doc["maximal"] is False


def test_scan_output(capsys):
    code, out, _ = run_cli(capsys, "scan", "--powers", "3,3,3,3", "--k", "3")
    assert code == 0
    assert json.loads(out) == {"k": 3, "failures": [[4, 1]]}


def test_slp_three_vars(capsys):
    code, out, _ = run_cli(capsys, "slp", "--vars", "3", "--powers", "2,3,4,5")
    assert code == 0
    doc = json.loads(out)
    assert doc["property"] == "SLP" and doc["status"] == "maximal-everywhere"

    code, out, _ = run_cli(capsys, "slp", "--vars", "3", "--powers", "3,5,5,5,5,5")
    doc = json.loads(out)
    assert doc["status"] == "fails" and doc["degrees"] == [6]
    assert [5, "fails"] in doc["checks"]


def test_slp_four_vars(capsys):
    code, out, _ = run_cli(capsys, "slp", "--vars", "4", "--powers", "3,3,3,3,3")
    doc = json.loads(out)
    assert doc["property"] == "WLP" and doc["status"] == "fails" and doc["degrees"] == [4]

    code, out, _ = run_cli(capsys, "slp", "--vars", "4", "--powers", "2,9,9,9,9")
    doc = json.loads(out)
    assert doc["status"] == "maximal-everywhere"


def test_verify_json_and_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--specs", "3,3,3,3", "--k", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"] == {"rows": 1, "agreements": 1, "disagreements": 0}
    row = doc["rows"][0]
    assert row["theory_fail"] == [[4, 1]] and row["oracle_fail"] == [[4, 1]]
    assert row["agree"] is True


def test_verify_csv_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--specs", "3,3,3,3;2,4,4,4", "--k", "3", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "spec;k;theory_fail_degrees;oracle_fail_degrees;agree;millis"
    first = lines[1].split(";")
    assert first[0] == "3,3,3,3" and first[1] == "3"
    assert first[2] == "4" and first[3] == "4" and first[4] == "true"


def test_verify_exit_one_on_disagreement(capsys, monkeypatch):
    # Force the oracle side to disagree to exercise the exit-code contract.
    monkeypatch.setattr(harness, "_oracle_failures", lambda *a, **k: ((99, 1),))
    code, out, _ = run_cli(capsys, "verify", "--specs", "3,3,3,3", "--k", "3")
    assert code == 1
    doc = json.loads(out)
    assert doc["summary"]["disagreements"] == 1


def test_verify_second_prime_retry_resolves_transient_disagreement(monkeypatch):
    # A special first sample is retried on the second prime; when the retry
    # agrees, the row counts as agreement and the exit code stays zero.
    calls = []
    real = harness._oracle_failures

    def flaky(spec, k, prime, seed, trials):
        calls.append(prime)
        if len(calls) == 1:
            return ((99, 1),)
        return real(spec, k, prime, seed, trials)

    monkeypatch.setattr(harness, "_oracle_failures", flaky)
    rows, summary = run_verification(SweepConfig(specs=((3, 3, 3, 3),), k=3))
    assert summary["disagreements"] == 0
    assert rows[0].agree and rows[0].retried
    assert len(calls) == 2 and calls[1] == harness.SECOND_PRIME


def test_output_byte_stable(capsys):
    args = ("scan", "--powers", "2,3,4,5", "--k", "2", "--seed", "7")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second

    args = ("verify", "--specs", "3,3,3,3;4,4,4,4", "--k", "3", "--seed", "3")
    _, v1, _ = run_cli(capsys, *args)
    _, v2, _ = run_cli(capsys, *args)
    scrub = lambda text: [
        {k: v for k, v in row.items() if k != "millis"} for row in json.loads(text)["rows"]
    ]
    assert scrub(v1) == scrub(v2)
    assert json.loads(v1)["summary"] == json.loads(v2)["summary"]


def test_env_var_prime_override(capsys, monkeypatch):
    monkeypatch.setenv("LEFLAB_PRIME", "1000003")
    code, out, _ = run_cli(capsys, "hilbert", "--vars", "3", "--powers", "2,2,2")
    assert code == 0
    assert json.loads(out) == {"hf": [1, 3, 3, 1], "reg": 3}


def test_usage_errors_exit_two(capsys):
    assert cli.main(["nonsense"]) == 2
    assert cli.main([]) == 2
    code, _, err = run_cli(capsys, "rank", "--powers", "3,3,3,3", "--k", "3", "--degree", "2")
    assert code == 2 and "error" in err


def test_classify_rejects_four_vars(capsys):
    code, _, err = run_cli(capsys, "classify", "--vars", "4", "--powers", "3,3,3,3", "--k", "3")
    assert code == 2


def test_theory_failures_dispatch():
    assert theory_failures(ExponentSpec(3, (3, 3, 3, 3)), 3) == ((4, 1),)
    assert theory_failures(ExponentSpec(3, (2, 3, 4)), 1) == ()
    assert theory_failures(ExponentSpec(3, (2, 3, 4)), 2) == ()
    assert theory_failures(ExponentSpec(4, (2, 6, 6, 6, 6)), 1) == ()
    assert theory_failures(ExponentSpec(4, (3, 3, 3, 3, 3)), 1) == ((4, 1),)
    with pytest.raises(ValueError):
        theory_failures(ExponentSpec(3, (3, 3, 3, 3)), 4)
    with pytest.raises(ValueError):
        theory_failures(ExponentSpec(4, (4, 4, 4, 4)), 1)


def test_run_verification_rows_sorted_and_complete():
    config = SweepConfig(num_vars=3, k=2, s_range=(3, 3), exp_range=(2, 3), trials=2)
    rows, summary = run_verification(config)
    specs = [r.exponents for r in rows]
    assert specs == sorted(specs)
    assert summary["rows"] == len(rows) == 4
    assert summary["disagreements"] == 0


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(primes=())
    with pytest.raises(ValueError):
        SweepConfig(trials=0)
    with pytest.raises(ValueError):
        SweepConfig(s_range=(5, 4))


def test_empty_explicit_specs_give_empty_report():
    rows, summary = run_verification(SweepConfig(specs=(), k=3))
    assert rows == [] and summary["rows"] == 0
