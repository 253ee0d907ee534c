"""Textual syntax and file formats.

Partitions are written "3,2,1 @ 3x3" with "-" for the empty parts list;
rationals are always "p/q".  Oracle tables and expansion reports are JSON
with sorted keys, so identical data serializes byte-identically.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import OracleParseError, PartitionSyntaxError
from .expansion import ClassExpansion, OracleTable
from .partitions import Box, BoxedPartition, make_boxed
from .symbolic import GENUS, INTEGRAL, SymbolicScalar, UnknownSymbol


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ZeroDivisionError
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError):
        raise OracleParseError(f"malformed rational {text!r}") from None


def parse_box(text: str) -> Box:
    text = text.strip().lower()
    try:
        m, k = text.split("x")
        box = Box(int(m), int(k))
    except ValueError:
        raise PartitionSyntaxError(f"malformed box {text!r}, expected MxK") from None
    if box.m < 0 or box.k < 0:
        raise PartitionSyntaxError(f"box {text!r} has negative bounds")
    return box


def parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise PartitionSyntaxError(f"malformed parts list {text!r}") from None


def parse_partition(text: str) -> BoxedPartition:
    """Parse 'p1,p2,... @ MxK' (or '- @ MxK' for the zero partition)."""
    if "@" not in text:
        raise PartitionSyntaxError(f"missing '@ MxK' in {text!r}")
    body, boxpart = text.split("@", 1)
    return make_boxed(parse_parts(body), parse_box(boxpart))


def format_parts(parts) -> str:
    return ",".join(str(p) for p in parts) if parts else "-"


def format_partition(p: BoxedPartition) -> str:
    return f"{format_parts(p.parts)} @ {p.box}"


def class_records(cls) -> list[dict]:
    """Class terms as a sorted list of partition/coefficient records."""
    return [
        {"partition": format_parts(part.parts), "coefficient": format_rational(coeff)}
        for part, coeff in cls.sorted_terms()
    ]


# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------


def symbol_record(sym: UnknownSymbol) -> dict:
    if sym.kind == GENUS:
        descr, m2, k2, a2 = sym.key
        if descr[0] == "schubert":
            variety = f"schubert:{format_parts(descr[1])}@{descr[2]}x{descr[3]}"
        else:
            variety = f"named:{descr[1]}"
        return {
            "kind": "genus",
            "variety": variety,
            "box2": f"{m2}x{k2}",
            "a2": format_parts(a2),
        }
    if sym.key and sym.key[0] == "gysin":
        _, m_shape, z_shapes, degree = sym.key
        return {
            "kind": "integral",
            "family": "gysin",
            "ambient": format_parts(m_shape),
            "cycle": [format_parts(s) for s in z_shapes],
            "degree": degree,
        }
    m1, k1, m2, k2, b1, b2 = sym.key
    return {
        "kind": "integral",
        "box1": f"{m1}x{k1}",
        "box2": f"{m2}x{k2}",
        "b1": format_parts(b1),
        "b2": format_parts(b2),
    }


def _parse_variety_key(text: str) -> tuple:
    if text.startswith("schubert:"):
        body = text[len("schubert:") :]
        if "@" not in body:
            raise OracleParseError(f"malformed variety {text!r}")
        parts_text, box_text = body.split("@", 1)
        box = parse_box(box_text)
        parts = make_boxed(parse_parts(parts_text), box)
        return ("schubert", parts.parts, box.m, box.k)
    if text.startswith("named:"):
        return ("named", text[len("named:") :])
    raise OracleParseError(f"malformed variety {text!r}")


def _genus_symbol_from_record(rec: dict) -> UnknownSymbol:
    try:
        descr = _parse_variety_key(rec["variety"])
        box2 = parse_box(rec["box2"])
        a2 = make_boxed(parse_parts(rec["a2"]), box2)
    except KeyError as exc:
        raise OracleParseError(f"genus record missing field {exc}") from None
    if descr[0] == "named":
        # named descriptors carry no box of their own in oracle files
        descr = ("named", descr[1])
    return UnknownSymbol(GENUS, (descr, box2.m, box2.k, a2.parts))


def _integral_symbol_from_record(rec: dict) -> UnknownSymbol:
    try:
        if rec.get("family") == "gysin":
            return UnknownSymbol(
                INTEGRAL,
                (
                    "gysin",
                    parse_parts(rec["ambient"]),
                    tuple(parse_parts(s) for s in rec["cycle"]),
                    int(rec["degree"]),
                ),
            )
        box1 = parse_box(rec["box1"])
        box2 = parse_box(rec["box2"])
        b1 = make_boxed(parse_parts(rec["b1"]), box1)
        b2 = make_boxed(parse_parts(rec["b2"]), box2)
    except KeyError as exc:
        raise OracleParseError(f"integral record missing field {exc}") from None
    return UnknownSymbol(INTEGRAL, (box1.m, box1.k, box2.m, box2.k, b1.parts, b2.parts))


# ---------------------------------------------------------------------------
# Oracle tables
# ---------------------------------------------------------------------------


def oracle_to_json(oracle: OracleTable) -> dict:
    integrals = []
    genera = []
    for sym in sorted(oracle.keys()):
        rec = symbol_record(sym)
        rec["value"] = format_rational(oracle[sym])
        kind = rec.pop("kind")
        if kind == "genus":
            genera.append(rec)
        else:
            integrals.append(rec)
    return {"integrals": integrals, "genera": genera}


def oracle_from_json(payload: dict) -> OracleTable:
    assignments = {}
    for rec in payload.get("integrals", []):
        sym = _integral_symbol_from_record(rec)
        assignments[sym] = parse_rational(rec.get("value", ""))
    for rec in payload.get("genera", []):
        sym = _genus_symbol_from_record(rec)
        assignments[sym] = parse_rational(rec.get("value", ""))
    return OracleTable(assignments)


def save_oracle(oracle: OracleTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(oracle_to_json(oracle), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_oracle(path) -> OracleTable:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise OracleParseError(f"{path}: {exc}") from None
    if not isinstance(payload, dict):
        raise OracleParseError(f"{path}: top level must be an object")
    return oracle_from_json(payload)


# ---------------------------------------------------------------------------
# Expansion reports
# ---------------------------------------------------------------------------


def scalar_to_json(expr: SymbolicScalar) -> list[dict]:
    out = []
    for mono, coeff in expr.sorted_terms():
        out.append(
            {
                "coefficient": format_rational(coeff),
                "symbols": [symbol_record(s) for s in mono],
            }
        )
    return out


def scalar_from_json(records) -> SymbolicScalar:
    total = SymbolicScalar.zero()
    for rec in records:
        coeff = parse_rational(rec.get("coefficient", ""))
        mono = []
        for srec in rec.get("symbols", []):
            if srec.get("kind") == "genus":
                mono.append(_genus_symbol_from_record(srec))
            else:
                mono.append(_integral_symbol_from_record(srec))
        total = total + SymbolicScalar({tuple(mono): coeff})
    return total


def expansion_to_json(table: ClassExpansion) -> dict:
    coefficients = []
    for part, expr in table.sorted_items():
        coefficients.append(
            {
                "partition": format_parts(part.parts),
                "weight": part.weight,
                "value": scalar_to_json(expr),
            }
        )
    box = table.variety.space.box
    return {
        "variety": table.variety.descriptor(),
        "box": str(box),
        "coefficients": coefficients,
        "unresolved": [symbol_record(s) for s in sorted(table.symbols())],
    }


def save_report(payload: dict, path) -> None:
    """Write a structured record (report or oracle) as canonical JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_report(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise OracleParseError(f"{path}: {exc}") from None
