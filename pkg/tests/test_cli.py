import io
import json
import subprocess
import sys

import pytest

from cycshuffle.cli import run


def call(*argv):
    out = io.StringIO()
    code, report = run(list(argv) + ["--json"], out)
    return code, json.loads(out.getvalue())


def test_eval_worked_example():
    code, doc = call("eval", "--stat", "cDesL", "--perm", "179624")
    assert code == 0
    assert doc["verdict"] == "ok"
    assert doc["payload"]["value"] == [3, 4, 6]
    assert set(doc) == {"command", "inputs", "verdict", "payload", "elapsed_ms"}


def test_cshuffle_count():
    code, doc = call("cshuffle", "--a", "63", "--b", "24")
    assert code == 0 and doc["payload"]["count"] == 6


def test_counterexample_pk_val():
    code, doc = call("counterexample", "--name", "pk_val")
    assert code == 0
    assert doc["payload"]["witness"] == [
        {"value": [0, 0], "count": 1}, {"value": [0, 1], "count": 1},
        {"value": [1, 0], "count": 1}, {"value": [1, 1], "count": 3}]
    assert doc["payload"]["counts"] == [1, 0]


def test_dims():
    code, doc = call("dims", "--stat", "cpk,cdes", "--n", "6")
    assert code == 0 and doc["payload"]["dimension"] == 9


def test_fail_exit_code():
    code, doc = call("check-csc", "--stat", "ind:Ddes", "--max-n", "5")
    assert code == 1
    assert doc["payload"]["result"] == "incompatible"
    assert doc["payload"]["witness"]["count_first"] != doc["payload"]["witness"]["count_second"]


def test_domain_error():
    code, doc = call("eval", "--stat", "des", "--perm", "112")
    assert code == 2
    assert doc["verdict"] == "error"
    assert doc["payload"]["code"] == "invalid_permutation"


def test_usage_error_names_flag():
    code, doc = call("eval", "--perm", "12")
    assert code == 2
    assert "--stat" in doc["payload"]["message"]
    code, doc = call("verify-theorem", "--name", "nonsense")
    assert code == 2 and "--name" in doc["payload"]["message"]


def test_unknown_counterexample_is_error():
    code, doc = call("counterexample", "--name", "nothing")
    assert code == 2 and doc["payload"]["code"] == "catalog_miss"


@pytest.mark.parametrize("argv", [
    ["ceval", "--stat", "ind:des", "--perm", "1234"],
    ["distribute", "--stat", "ind:des", "--a", "63", "--b", "24"],
    ["distribute", "--stat", "des", "--a", "71", "--b", "25"],
    ["shuffle", "--a", "71", "--b", "25", "--des", "1"],
    ["check-sc", "--stat", "des", "--max-n", "4"],
    ["check-equiv", "--a", "cval", "--b", "cpk", "--max-n", "5"],
    ["check-f-equiv", "--a", "Pk", "--b", "Val", "--f", "c", "--max-n", "5"],
    ["lifting-check", "--cstat", "cdes", "--stat", "des", "--n", "4"],
    ["verify-theorem", "--name", "range", "--max-size", "6"],
    ["counterexample", "--name", "Lpk"],
])
def test_replayable(argv):
    code1, doc1 = call(*argv)
    code2, doc2 = call(*argv)
    assert code1 == code2 == 0
    assert json.dumps(doc1["payload"]) == json.dumps(doc2["payload"])


def test_verify_theorem_report_fields():
    code, doc = call("verify-theorem", "--name", "cdes-forms", "--max-size", "6", "--trunc", "20")
    assert code == 0
    p = doc["payload"]
    assert p["name"] == "cdes-forms" and p["verdict"] == "holds" and p["params_checked"] > 0


def test_human_table():
    out = io.StringIO()
    code, _ = run(["cshuffle", "--a", "63", "--b", "24"], out)
    text = out.getvalue()
    assert code == 0 and "verdict: ok" in text and "count: 6" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cycshuffle", "eval", "--stat", "des", "--perm", "312", "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["value"] == 1
