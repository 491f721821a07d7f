import json
import re

import pytest

from s3bundles.cli import Command, Report, UsageError, main, parse, render_text, run


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_compare():
    cmd = parse(["compare", "1", "12", "5", "12", "--category", "homeo"])
    assert cmd.name == "compare"
    assert cmd.args == {"m": 1, "n": 12, "m2": 5, "n2": 12, "category": "homeo",
                        "orientation": "preserving"}


def test_parse_sqrt_minus():
    assert parse(["sqrt", "12", "--minus"]).args == {"n": 12, "sign": -1}


def test_parse_invariants_n_zero():
    with pytest.raises(UsageError, match="undefined for n = 0"):
        parse(["invariants", "0", "0"])


def test_parse_negative_n_hint():
    with pytest.raises(UsageError, match=r"M\(1,2\)") as exc:
        parse(["invariants", "3", "-2"])
    assert exc.value.token == "-2"


def test_negative_m_accepted():
    assert parse(["invariants", "-7", "3"]).args == {"m": -7, "n": 3}


@pytest.mark.parametrize("argv,fragment", [
    (["frobnicate"], "invalid choice"),
    (["invariants", "x1", "2"], "malformed integer 'x1'"),
    (["compare", "1", "2", "3"], "required"),
    (["invariants", "1", "-3"], "must be >= 0"),
    ([], "missing subcommand"),
])
def test_usage_errors_distinct(capsys, argv, fragment):
    code, out, err = invoke(capsys, *argv)
    assert code == 2 and out == ""
    assert fragment in err


def test_usage_error_messages_differ(capsys):
    msgs = set()
    for argv in (["frobnicate"], ["invariants", "x", "2"], ["compare", "1", "2", "3"], ["invariants", "1", "-3"]):
        msgs.add(invoke(capsys, *argv)[2])
    assert len(msgs) == 4


EXIT_MATRIX = [
    (["compare", "1", "12", "5", "12", "--category", "homeo", "--orientation", "preserving"], 0),
    (["compare", "0", "2", "-1", "2", "--category", "homotopy", "--orientation", "preserving"], 1),
    (["compare", "0", "2", "-1", "2", "--category", "diffeo", "--orientation", "reversing"], 0),
    (["compare", "0", "1", "1", "1", "--category", "diffeo"], 1),
    (["compare", "1", "3", "1", "4", "--orientation", "either"], 1),
    (["compare", "1", "0", "13", "0", "--category", "homotopy", "--orientation", "reversing"], 0),
    (["compare", "1", "12", "5", "12", "--category", "pl"], 0),
    (["compare", "1", "12", "5", "12", "--category", "almost-diffeo"], 0),
    (["invariants", "1", "12"], 0),
    (["invariants", "0", "0"], 2),
    (["invariants", "1", "-2"], 2),
    (["classes", "7"], 0),
    (["classes", "0"], 2),
    (["table", "14"], 0),
    (["sqrt", "12", "--minus"], 0),
    (["sqrt", "0"], 2),
    (["census"], 0),
    (["nonsense"], 2),
    (["compare", "1", "12", "5"], 2),
]


@pytest.mark.parametrize("argv,code", EXIT_MATRIX)
def test_exit_code_matrix(capsys, argv, code):
    assert invoke(capsys, *argv)[0] == code


def test_exit_matrix_size():
    assert len(EXIT_MATRIX) >= 12


def test_compare_text_and_json(capsys):
    code, text, _ = invoke(capsys, "compare", "1", "12", "5", "12", "--category", "homeo")
    assert code == 0 and "equivalent, witness α = 5" in text
    code, out, _ = invoke(capsys, "compare", "1", "12", "5", "12", "--format", "json")
    d = json.loads(out)
    assert d["status"] == "ok" and d["payload"]["witness_alpha"] == 5
    assert d["payload"]["left"]["halfp"] == 2 and d["payload"]["right"]["mu"] == "59/336"
    assert d["payload"]["rule"]


def test_compare_not_equivalent_text(capsys):
    code, text, _ = invoke(capsys, "compare", "0", "2", "-1", "2", "--category", "homotopy")
    assert code == 1 and "not equivalent" in text


def test_compare_reversing_witness_shift(capsys):
    code, out, _ = invoke(capsys, "compare", "0", "2", "-1", "2", "--category", "homotopy",
                          "--orientation", "reversing", "--format", "json")
    p = json.loads(out)["payload"]
    assert code == 0 and p["witness_alpha"] == 1 and p["witness_shift"] == 0


@pytest.mark.parametrize("argv", [
    ["invariants", "3", "7"],
    ["compare", "1", "12", "5", "12"],
    ["compare", "0", "2", "-1", "2", "--orientation", "either", "--category", "diffeo"],
    ["classes", "5", "--orientation", "either"],
    ["table", "12"],
    ["sqrt", "65", "--minus"],
    ["census"],
])
def test_json_round_trip(argv):
    report, _ = run(parse(argv))
    text = report.to_json()
    back = Report.from_json(text)
    assert back == report and back.to_json() == text
    assert back.schema_version == "1"


def _numbers(obj):
    """All integers and p/q strings found in a JSON value."""
    out = set()
    if isinstance(obj, dict):
        for k, v in obj.items():
            # residue lists are rendered through their condition text
            if k != "residues":
                out |= _numbers(v)
    elif isinstance(obj, list):
        for v in obj:
            out |= _numbers(v)
    elif isinstance(obj, bool) or obj is None:
        pass
    elif isinstance(obj, int):
        out.add(str(obj))
    elif isinstance(obj, str):
        out.update(re.findall(r"-?\d+(?:/\d+)?", obj))
    return out


@pytest.mark.parametrize("argv,keys", [
    (["invariants", "3", "7"], None),
    (["compare", "1", "12", "5", "12"], ["witness_alpha"]),
    (["table", "12"], None),
    (["sqrt", "65", "--minus"], None),
    (["census"], None),
])
def test_text_and_json_share_numbers(argv, keys):
    report, _ = run(parse(argv))
    text = render_text(report)
    tokens = set(re.findall(r"-?\d+(?:/\d+)?", text))
    payload = report.payload
    if keys:
        payload = {k: payload[k] for k in keys}
    # every number in the json payload also appears in the text rendering
    missing = {x for x in _numbers(payload) if x not in tokens and x not in text}
    assert not missing


def test_invariants_text(capsys):
    code, text, _ = invoke(capsys, "invariants", "1", "12")
    assert text.strip() == "M(1,12): halfp = 2 mod 12, s1 = 11/12, mu = 23/336"


def test_rationals_are_strings():
    report, _ = run(parse(["invariants", "1", "12"]))
    d = json.loads(report.to_json())["payload"]
    assert d["mu"] == "23/336" and isinstance(d["s1"], str)


def test_sqrt_output_ascending(capsys):
    code, out, _ = invoke(capsys, "sqrt", "65", "--minus", "--format", "json")
    p = json.loads(out)["payload"]
    assert p["elements"] == [8, 18, 47, 57] and p["count"] == 4


def test_classes_ordering(capsys):
    code, out, _ = invoke(capsys, "classes", "7", "--format", "json")
    p = json.loads(out)["payload"]
    reps = [c["representative"] for c in p["classes"]]
    assert reps == sorted(reps) == [0, 1, 2, 3] and p["period"] == 392


def test_json_usage_error(capsys):
    code, out, _ = invoke(capsys, "invariants", "0", "0", "--format", "json")
    d = json.loads(out)
    assert code == 2 and d["status"] == "error" and "n = 0" in d["payload"]["message"]


def test_run_domain_error_exit_two():
    report, code = run(Command("compare", {"m": 0, "n": 0, "m2": 1, "n2": 0,
                                           "category": "bogus", "orientation": "preserving"}))
    assert code == 2 and report.status == "error"


def test_verify_section4_cli(capsys):
    code, text, _ = invoke(capsys, "verify-section4")
    assert code == 0 and text.strip().endswith("10/10 tables match")


def test_verbose_flag():
    assert parse(["census", "-vv"]).verbosity == 2
