import json

import pytest

from curveh.cli import SCHEMA, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def docs(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_analyze_bolza(capsys):
    code, out, _ = run(capsys, "analyze", "x^5-y^2*z^3-x*z^4")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == SCHEMA
    assert doc["exponents"] == [2, 4, 4] and doc["class"] == "Type2A"
    assert (doc["tau"], doc["nu"], doc["type"]) == (8, 4, 2)
    assert doc["certificates"]["hilbert_series"] and all(doc["checks"].values())
    assert doc["tables"]["hf"][-1] == 8


def test_analyze_is_byte_identical(capsys):
    _, a, _ = run(capsys, "analyze", "--catalog", "eb7")
    _, b, _ = run(capsys, "analyze", "--catalog", "eb7")
    assert a == b
    assert "timings" not in json.loads(a)


def test_timings_opt_in(capsys):
    _, out, _ = run(capsys, "analyze", "x^3+y^3+z^3", "--timings")
    assert "analysis_seconds" in json.loads(out)["timings"]


@pytest.mark.parametrize("name,t", [("ziegler", 3), ("yuzvinsky", 4)])
def test_analyze_catalog_types(capsys, name, t):
    code, out, _ = run(capsys, "analyze", "--catalog", name)
    assert code == 0 and json.loads(out)["type"] == t


def test_cl_flags_stated_tau(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "cl")
    doc = json.loads(out)
    assert doc["tau"] == doc["tau_euler_characteristic"] == 23
    assert doc["stated"]["tau_stated"] == {"stated": 24, "computed": 23, "agrees": False}
    _, table, _ = run(capsys, "analyze", "--catalog", "cl", "--table")
    assert "DIFFERS" in table


def test_table_view(capsys):
    code, out, _ = run(capsys, "analyze", "x^5-y^2*z^3-x*z^4", "--table")
    assert code == 0
    rows = dict(line.split(None, 1) for line in out.splitlines())
    assert rows["class"] == '"Type2A"' and rows["exponents"] == "[2, 4, 4]"
    assert rows["checks"] == "all pass"


@pytest.mark.parametrize("argv,code", [
    (["analyze", "x^2+y"], 2),
    (["analyze", "x^2+"], 2),
    (["analyze"], 2),
    (["analyze", "--catalog", "nope"], 2),
    (["analyze", "x^2*y"], 3),
    (["analyze", "(x+y)^2*z"], 3),
])
def test_analyze_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code and not out and err.startswith("error")


def test_kmax_env(capsys, monkeypatch):
    monkeypatch.setenv("CURVEH_KMAX", "2")
    assert run(capsys, "analyze", "x^5-y^2*z^3-x*z^4")[0] == 4
    monkeypatch.setenv("CURVEH_KMAX", "8")
    assert run(capsys, "analyze", "x^5-y^2*z^3-x*z^4")[0] == 0
    monkeypatch.setenv("CURVEH_KMAX", "lots")
    assert run(capsys, "analyze", "x^3+y^3+z^3")[0] == 2


def test_kmax_flag_and_prime_fast(capsys):
    code, out, _ = run(capsys, "analyze", "x^5-y^2*z^3-x*z^4", "--kmax", "2")
    assert code == 4
    code, out, _ = run(capsys, "analyze", "x^5-y^2*z^3-x*z^4", "--prime-fast")
    doc = json.loads(out)
    assert code == 0 and doc["exponents"] == [2, 4, 4] and doc["tau"] == 8


def test_no_saturation(capsys):
    code, out, _ = run(capsys, "analyze", "x^3+y^3+z^3", "--no-saturation")
    doc = json.loads(out)
    assert code == 0 and doc["nu"] is None and doc["tables"]["n"] is None


def test_construct_node_line(capsys, tmp_path):
    path = tmp_path / "a.txt"
    code, out, _ = run(capsys, "construct", "double-pencil", "3", "4", "--add-node-line",
                       "--seed", "3", "--out", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["exponents"] == [4, 5, 5] and doc["class"] == "Type2A"
    assert doc["certificates"]["genericity"][0]["count"] == 6
    code, again, _ = run(capsys, "analyze", "--file", str(path))
    assert json.loads(again)["exponents"] == [4, 5, 5]


def test_construct_examples(capsys):
    _, out, _ = run(capsys, "construct", "double-pencil", "1", "3")
    assert json.loads(out)["class"] == "Free"
    _, out, _ = run(capsys, "construct", "catalog", "eb7")
    assert json.loads(out)["profile"] == {"t2": 12, "t3": 3}


def test_construct_generic_conic_deterministic(capsys):
    argv = ("construct", "catalog", "three-conics", "--add-generic-conic", "1", "--seed", "9")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b and json.loads(a)["exponents"] == [4, 5, 6]


def test_construct_errors(capsys):
    assert run(capsys, "construct", "double-pencil", "3")[0] == 2
    assert run(capsys, "construct", "catalog", "bolza")[0] == 2
    assert run(capsys, "construct", "near-pencil", "4", "--add-node-line", "--node", "9")[0] == 2
    assert run(capsys, "construct", "double-pencil", "2", "1")[0] == 2


def test_construct_genericity_failure(capsys, monkeypatch):
    import curveh.cli as cli
    from curveh.arrangements import GenericityError

    def never(*a, **k):
        raise GenericityError("no sample")

    monkeypatch.setattr(cli, "add_generic_line", never)
    code, out, err = run(capsys, "construct", "double-pencil", "3", "3", "--add-generic-line", "1")
    assert code == 5 and "certification" in err


def test_verify_ll_catalog(capsys):
    code, out, _ = run(capsys, "verify", "ll", "--catalog", "eb7")
    check, summary = docs(out)
    assert code == 0 and check["verdict"] == "pass"
    assert check["computed"]["sum_slack"] == 0 and check["computed"]["multiplicity_bound"] == 3
    assert summary["summary"] == {"pass": 1, "fail": 0, "hypothesis-not-met": 0}


def test_verify_ex10(capsys):
    code, out, _ = run(capsys, "verify", "thm10", "--example", "ex10")
    check = docs(out)[0]
    assert code == 0 and check["verdict"] == "hypothesis-not-met"
    assert check["computed"]["exponents"] == [1, 2, 2]


def test_verify_campaign_deterministic(capsys):
    _, a, _ = run(capsys, "verify", "prop2", "--trials", "2", "--seed", "7")
    _, b, _ = run(capsys, "verify", "prop2", "--trials", "2", "--seed", "7")
    assert a == b
    assert docs(a)[-1]["summary"]["pass"] == 10


def test_verify_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "thm2", "--catalog", "eb7")[0] == 2
    assert run(capsys, "verify", "ll", "--catalog", "bolza")[0] == 2
    assert run(capsys, "verify", "thm10", "--example", "nope")[0] == 2


def test_verify_failure_exit(capsys, monkeypatch):
    import curveh.cli as cli
    from curveh.verify import FAIL, TheoremCheck

    monkeypatch.setattr(cli, "default_suite", lambda *a: [TheoremCheck("x", {}, verdict=FAIL)])
    assert run(capsys, "verify", "thm0")[0] == 1


def test_batch(capsys, tmp_path):
    arr = tmp_path / "pencil.txt"
    arr.write_text("line: 1 0 0\nline: 0 1 0\nline: 1 1 0\n")
    batch = tmp_path / "batch.txt"
    batch.write_text(f"# header\nx^3+y^3+z^3\n\ncatalog:bolza\nfile:{arr}\nx^2*y\nx^2+y\n")
    code, out, _ = run(capsys, "batch", str(batch))
    rows = docs(out)
    assert [r.get("type") for r in rows[:3]] == [2, 2, 0]
    assert rows[3]["error"]["exit_code"] == 3 and rows[4]["error"]["exit_code"] == 2
    assert code == 3
    assert run(capsys, "batch", str(tmp_path / "missing.txt"))[0] == 2


def test_batch_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("x*y*z\n"))
    code, out, _ = run(capsys, "batch", "-")
    assert code == 0 and docs(out)[0]["class"] == "Free"
