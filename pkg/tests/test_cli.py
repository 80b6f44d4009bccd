"""CLI contract: subcommand coverage, the JSON envelope, and exit codes."""

import json

from tatedual.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv, "--json")
    return code, json.loads(out)


# --- documented examples ----------------------------------------------------

def test_gamma_gens_text_listing(capsys):
    code, out, _ = invoke(capsys, "gamma", "gens", "--p", "2", "--q", "2", "--prec", "4")
    assert code == 0
    assert "0, 1/2, 1/4, 1/8" in out


def test_gamma_gens_json(capsys):
    code, doc = invoke_json(capsys, "gamma", "gens", "--p", "2", "--q", "2", "--prec", "4")
    assert code == 0
    assert doc["result"]["generators"] == ["0", "1/2", "1/4", "1/8"]


def test_uhf_from_tate_json_fragments(capsys):
    code, out, _ = invoke(
        capsys, "uhf", "from-tate", "--p", "2", "--q", "2", "--prec", "6", "--json"
    )
    assert code == 0
    assert '"k0":"2^inf"' in out
    assert '"label":"CAR"' in out


def test_tate_coeffs_json_fragment(capsys):
    code, out, _ = invoke(
        capsys, "tate", "coeffs", "--p", "2", "--q", "2", "--prec", "4", "--json"
    )
    assert code == 0
    assert '"a4":"2 mod 2^4"' in out


# --- envelope ---------------------------------------------------------------

def test_json_documents_roundtrip_canonically(capsys):
    cases = [
        ("padic", "canon", "--p", "3", "--q", "12", "--prec", "4"),
        ("gamma", "group", "--p", "3", "--q", "6", "--prec", "3"),
        ("uhf", "k0", "--desc", "sizes=6,10"),
        ("dual", "check", "--p", "3", "--level", "2"),
    ]
    for argv in cases:
        code, out, _ = invoke(capsys, *argv, "--json")
        assert code == 0
        raw = out.strip()
        doc = json.loads(raw)
        assert json.dumps(doc, sort_keys=True, separators=(",", ":")) == raw
        assert doc["status"] == "ok"
        assert doc["diagnostics"] == []
        assert doc["command"] == f"{argv[0]} {argv[1]}"


def _assert_no_floats(node):
    if isinstance(node, float):
        raise AssertionError(f"float leaked into JSON: {node!r}")
    if isinstance(node, dict):
        for v in node.values():
            _assert_no_floats(v)
    elif isinstance(node, list):
        for v in node:
            _assert_no_floats(v)


def test_no_floating_point_fields_anywhere(capsys):
    cases = [
        ("gamma", "limit", "--p", "3", "--q", "6", "--prec", "6"),
        ("gamma", "density", "--p", "3", "--q", "3", "--prec", "4",
         "--target", "1/2", "--epsilon", "1/9"),
        ("tate", "coeffs", "--p", "2", "--q", "2", "--prec", "4"),
        ("uhf", "stable-iso", "--n", "2^inf", "--n2", "2^inf*3^2"),
    ]
    for argv in cases:
        code, doc = invoke_json(capsys, *argv)
        assert code == 0
        _assert_no_floats(doc)


# --- subcommand coverage ------------------------------------------------------

def test_padic_canon(capsys):
    code, doc = invoke_json(capsys, "padic", "canon", "--p", "3", "--q", "12", "--prec", "4")
    assert code == 0
    assert doc["result"]["entries"] == [0, 3, 12, 12]


def test_padic_arith_ops(capsys):
    code, doc = invoke_json(
        capsys, "padic", "arith", "--op", "add", "--p", "3", "--prec", "2",
        "--x", "2", "--y", "2",
    )
    assert code == 0
    assert doc["result"]["digits"] == [1, 1]

    code, doc = invoke_json(
        capsys, "padic", "arith", "--op", "invert", "--p", "2", "--prec", "4", "--x", "9"
    )
    assert code == 0
    assert doc["result"]["result"] == "9 mod 2^4"


def test_digit_list_input(capsys):
    code, doc = invoke_json(capsys, "padic", "canon", "--p", "2", "--q", "[0,1,0,0]")
    assert code == 0
    assert doc["result"]["entries"] == [0, 2, 2, 2]


def test_gamma_subcommands(capsys):
    code, doc = invoke_json(capsys, "gamma", "prufer-check", "--p", "2", "--q", "2", "--prec", "5")
    assert code == 0
    assert doc["result"]["all_hold"] is True

    code, doc = invoke_json(capsys, "gamma", "contains-one", "--p", "3", "--q", "6", "--prec", "6")
    assert code == 0
    assert doc["result"] == {"contains_one": False, "content": 2}

    code, doc = invoke_json(
        capsys, "gamma", "density", "--p", "3", "--q", "3", "--prec", "4",
        "--target", "1/2", "--epsilon", "1/9",
    )
    assert code == 0
    assert doc["result"] == {"witness": "13/27", "distance": "1/54"}

    code, doc = invoke_json(capsys, "gamma", "limit", "--p", "3", "--q", "6", "--prec", "6")
    assert code == 0
    assert doc["result"] == {"sn": "3^inf", "scale": 2, "stabilized": True}


def test_uhf_subcommands(capsys):
    code, doc = invoke_json(capsys, "uhf", "k0", "--desc", "sizes=6,10")
    assert code == 0
    assert doc["result"]["k0"] == "2^2*3*5"

    code, doc = invoke_json(capsys, "uhf", "stable-iso", "--n", "2^inf", "--n2", "3^inf")
    assert code == 0
    assert doc["result"] == {"equal": False}

    code, doc = invoke_json(capsys, "uhf", "stable-iso", "--n", "2^inf", "--n2", "2^inf*3^2")
    assert code == 0
    assert doc["result"] == {"equal": True, "witness": {"r": 1, "s": 9}}


def test_dual_subcommands(capsys):
    code, doc = invoke_json(
        capsys, "dual", "pair", "--p", "2", "--z", "5", "--prec", "3", "--gamma", "1/2^3"
    )
    assert code == 0
    assert doc["result"]["value"] == "5/8"

    code, doc = invoke_json(capsys, "dual", "check", "--p", "2", "--level", "3")
    assert code == 0
    assert doc["result"]["perfect"] is True


# --- exit codes ---------------------------------------------------------------

def test_unknown_subcommand_exits_2(capsys):
    assert invoke(capsys, "nonsense")[0] == 2
    assert invoke(capsys, "gamma", "nonsense")[0] == 2


def test_input_errors_exit_2(capsys):
    code, _, err = invoke(capsys, "gamma", "gens", "--p", "2", "--q", "2")  # no prec
    assert code == 2
    code, _, _ = invoke(
        capsys, "padic", "canon", "--p", "2", "--q", "0,1", "--prec", "3"
    )
    assert code == 2
    code, _, _ = invoke(
        capsys, "gamma", "density", "--p", "3", "--q", "3", "--prec", "4",
        "--target", "x/y", "--epsilon", "1/9",
    )
    assert code == 2


def test_precondition_violations_exit_3(capsys):
    code, _, err = invoke(capsys, "tate", "coeffs", "--p", "2", "--q", "3", "--prec", "4")
    assert code == 3
    assert "valuation" in err

    code, _, _ = invoke(
        capsys, "padic", "arith", "--op", "invert", "--p", "2", "--prec", "4", "--x", "4"
    )
    assert code == 3

    code, _, _ = invoke(capsys, "dual", "pair", "--p", "2", "--z", "1",
                        "--prec", "2", "--gamma", "1/3^2")
    assert code == 3

    code, _, _ = invoke(capsys, "padic", "canon", "--p", "15", "--q", "1", "--prec", "3")
    assert code == 3


def test_error_envelope_in_json_mode(capsys):
    code, out, _ = invoke(
        capsys, "tate", "coeffs", "--p", "2", "--q", "3", "--prec", "4", "--json"
    )
    assert code == 3
    doc = json.loads(out)
    assert doc["status"] == "error"
    assert doc["diagnostics"]
    assert doc["result"] is None


def test_help_exits_zero(capsys):
    assert invoke(capsys, "--help")[0] == 0
