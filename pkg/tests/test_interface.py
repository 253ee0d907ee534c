import json
from fractions import Fraction

import pytest

from schubert import (
    Box,
    NotWeaklyDecreasing,
    OracleParseError,
    PartitionSyntaxError,
    expand_all,
    load_oracle,
    load_report,
    make_boxed,
    parse_partition,
    save_oracle,
    save_report,
    schubert_variety,
)
from schubert.cli import main
from schubert.serialize import (
    expansion_to_json,
    format_partition,
    format_rational,
    oracle_from_json,
    oracle_to_json,
    parse_rational,
    scalar_from_json,
    scalar_to_json,
)


def test_parse_partition():
    p = parse_partition("3,2,1 @ 3x3")
    assert p.parts == (3, 2, 1) and p.box == Box(3, 3)
    z = parse_partition("- @ 2x2")
    assert z.parts == (0, 0)
    with pytest.raises(NotWeaklyDecreasing):
        parse_partition("1,2 @ 3x3")
    with pytest.raises(PartitionSyntaxError):
        parse_partition("3,2,1")
    with pytest.raises(PartitionSyntaxError):
        parse_partition("3,2,1 @ 3by3")
    assert format_partition(p) == "3,2,1 @ 3x3"


def test_rational_round_trip():
    assert parse_rational("2/3") == Fraction(2, 3)
    assert format_rational(Fraction(1)) == "1/1"
    with pytest.raises(OracleParseError):
        parse_rational("1/0")
    with pytest.raises(OracleParseError):
        parse_rational("x")


def test_oracle_round_trip(tmp_path):
    payload = {
        "integrals": [
            {"box1": "3x3", "box2": "3x2", "b1": "3,1,0", "b2": "3,2", "value": "1/1"}
        ],
        "genera": [
            {"variety": "schubert:3,2,1@3x3", "box2": "3x2", "a2": "3,2", "value": "-2/3"}
        ],
    }
    path = tmp_path / "oracle.json"
    path.write_text(json.dumps(payload))
    table = load_oracle(path)
    assert len(table) == 2
    out = tmp_path / "back.json"
    save_oracle(table, out)
    assert load_oracle(out).assignments == table.assignments
    # canonical serialization is byte-stable
    save_oracle(load_oracle(out), tmp_path / "again.json")
    assert (tmp_path / "again.json").read_bytes() == out.read_bytes()


def test_oracle_parse_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"integrals": [{"box1": "3x3"}]}')
    with pytest.raises(OracleParseError):
        load_oracle(path)
    path.write_text("not json")
    with pytest.raises(OracleParseError):
        load_oracle(path)


def test_expansion_report_round_trip(tmp_path):
    table = expand_all(schubert_variety(make_boxed([2, 1], Box(2, 2))), {})
    payload = expansion_to_json(table)
    path = tmp_path / "report.json"
    save_report(payload, path)
    loaded = load_report(path)
    assert loaded == json.loads(json.dumps(payload))
    for rec in loaded["coefficients"]:
        rebuilt = scalar_to_json(scalar_from_json(rec["value"]))
        assert rebuilt == rec["value"]


def test_oracle_named_variety_symbols():
    payload = {
        "integrals": [],
        "genera": [{"variety": "named:quadric", "box2": "0x0", "a2": "-", "value": "4/1"}],
    }
    table = oracle_from_json(payload)
    ((sym, value),) = table.assignments.items()
    assert sym.kind == "genus" and value == 4
    assert oracle_to_json(table)["genera"][0]["variety"] == "named:quadric"


def test_cli_triple(capsys):
    code = main(["triple", "4,4,4,1,1 @ 4x5", "4,4,2,1,1 @ 4x5", "4,4,2,2,2 @ 4x5"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "1/1"


def test_cli_product_and_pairkind(capsys):
    assert main(["product", "2,1 @ 2x2", "2,1 @ 2x2"]) == 0
    out = capsys.readouterr().out
    assert "[2,0]" in out and "[1,1]" in out
    assert main(["pairkind", "3,3,0 @ 3x3", "2,2,0 @ 3x3"]) == 0
    assert capsys.readouterr().out.strip() == "empty"


def test_cli_basis_singular_profile(capsys):
    assert main(["basis", "3,2,1 @ 3x3", "4"]) == 0
    assert capsys.readouterr().out.split() == ["3,1,0", "2,2,0", "2,1,1"]
    assert main(["singular", "3,2,1 @ 3x3"]) == 0
    assert capsys.readouterr().out.split() == ["1,1,1", "3,0,0"]
    assert main(["singular", "3,3 @ 3x3"]) == 0
    assert capsys.readouterr().out.strip() == "nonsingular"
    assert main(["profile", "3,1,0 @ 3x3"]) == 0
    assert capsys.readouterr().out.strip() == "m''=3 k''=2 a''=3,2"


def test_cli_segre_push(capsys):
    assert main(["segre-push", "1 @ 1x1", "1 @ 1x1"]) == 0
    out = capsys.readouterr().out
    assert "[2,0]" in out and "[1,1]" in out


def test_cli_expand_and_resolve(tmp_path, capsys):
    assert main(["expand", "--schubert", "2,1 @ 2x2", "--mode", "deep"]) == 0
    out = capsys.readouterr().out
    assert "unresolved symbols" in out

    report_path = tmp_path / "expansion.json"
    assert main(["expand", "--schubert", "2,1 @ 2x2", "--out", str(report_path)]) == 0
    capsys.readouterr()
    payload = load_report(report_path)

    oracle = {"integrals": [], "genera": []}
    for rec in payload["unresolved"]:
        rec = dict(rec)
        kind = rec.pop("kind")
        rec["value"] = "1/2"
        oracle[kind if kind == "genera" else ("genera" if kind == "genus" else "integrals")].append(rec)
    oracle_path = tmp_path / "oracle.json"
    oracle_path.write_text(json.dumps(oracle))
    assert main(
        ["resolve", "--schubert", "2,1 @ 2x2", "--oracle", str(oracle_path)]
    ) == 0
    out = capsys.readouterr().out
    assert "[2,1] = 1/1" in out


def test_cli_verify_and_example(capsys):
    assert main(["verify", "duality", "--box", "2x2"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out and "cases" in out
    assert main(["example", "x321"]) == 0
    out = capsys.readouterr().out
    assert "lambda_{2,2}" in out


def test_cli_determinism(capsys):
    main(["expand", "--schubert", "2,1 @ 2x2", "--json"])
    first = capsys.readouterr().out
    main(["expand", "--schubert", "2,1 @ 2x2", "--json"])
    assert capsys.readouterr().out == first


def test_cli_error_exit(capsys):
    assert main(["product", "1,2 @ 2x2", "1 @ 2x2"]) == 2
    err = capsys.readouterr().err
    assert "error" in err
