"""Report rendering: text for humans, JSON and CSV for machines.

Exact values never pass through floats. JSON carries each rational as
{"num": "...", "den": "..."} decimal strings; CSV prints "p/q" (bare "p"
for integers) because spreadsheets mangle big integers. Both formats are
versioned: JSON objects carry schema "linewiener/1", CSV starts with a
"# linewiener-csv/1 <kind>" comment line.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Optional, Union

from .analysis import (
    CheckResult,
    MinimizerReport,
    RatioReport,
    SubdividedQuipuCheck,
    SubdividedQuipuDeviation,
    ThresholdReport,
)

JSON_SCHEMA = "linewiener/1"
CSV_SCHEMA = "linewiener-csv/1"

Rationalish = Union[int, Fraction, None]


def rational_text(x: Rationalish) -> str:
    """"p/q", with the "/q" dropped for integers; empty for None."""
    if x is None:
        return ""
    if isinstance(x, int):
        return str(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_json(x: Rationalish):
    """{"num", "den"} decimal strings, or None."""
    if x is None:
        return None
    if isinstance(x, int):
        return {"num": str(x), "den": "1"}
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _bool_text(b: Optional[bool]) -> str:
    if b is None:
        return ""
    return "true" if b else "false"


def _csv_lines(kind: str, header: list[str], rows: list[list[str]],
               comments: list[str] = ()) -> str:
    buf = io.StringIO()
    buf.write(f"# {CSV_SCHEMA} {kind}\n")
    for line in comments:
        buf.write(f"# {line}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ----------------------------------------------------------- per-kind JSON


def report_json(obj) -> dict:
    """Schema-stamped dict for any report type; json.dumps-ready."""
    if isinstance(obj, RatioReport):
        return {
            "schema": JSON_SCHEMA,
            "kind": "ratio",
            "order": obj.order,
            "is_tree": obj.is_tree,
            "wiener": obj.wiener,
            "wiener_k": list(obj.wiener_k),
            "d2": obj.d2,
            "r_k": [rational_json(r) for r in obj.r_k],
            "path_r2": rational_json(obj.path_r2),
            "beats_path": obj.beats_path,
        }
    if isinstance(obj, MinimizerReport):
        return {
            "schema": JSON_SCHEMA,
            "kind": "search",
            "order": obj.order,
            "class_description": obj.class_description,
            "min_ratio": rational_json(obj.min_ratio),
            "witnesses": [w.decode("ascii") for w in obj.witnesses],
            "trees_scanned": obj.trees_scanned,
        }
    if isinstance(obj, ThresholdReport):
        return {
            "schema": JSON_SCHEMA,
            "kind": "scan",
            "family_case": obj.family_case,
            "smallest_passing_a": obj.smallest_passing_a,
            "per_a_gap": [
                {"a": a, "gap": rational_json(gap)}
                for a, gap in obj.per_a_gap
            ],
        }
    if isinstance(obj, SubdividedQuipuCheck):
        return {
            "schema": JSON_SCHEMA,
            "kind": "ua-check",
            "a": obj.a,
            "n": obj.n,
            "r2_ua": rational_json(obj.r2_ua),
            "r2_path": rational_json(obj.r2_path),
            "holds": obj.holds,
        }
    if isinstance(obj, SubdividedQuipuDeviation):
        return {
            "schema": JSON_SCHEMA,
            "kind": "ua-deviation",
            "a": obj.a,
            "w_ua": obj.w_ua,
            "d2_ua": obj.d2_ua,
            "w_dev": rational_json(obj.w_dev),
            "d2_dev": rational_json(obj.d2_dev),
        }
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def checks_json(checks: list[CheckResult]) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "kind": "verify",
        "ok": all(c.ok for c in checks),
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks
        ],
    }


def wiener_json(value: int, order: int) -> dict:
    return {
        "schema": JSON_SCHEMA,
        "kind": "wiener",
        "order": order,
        "wiener": value,
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


# ------------------------------------------------------------ per-kind CSV


def report_csv(obj) -> str:
    if isinstance(obj, RatioReport):
        comments = [
            f"order={obj.order}",
            f"is_tree={_bool_text(obj.is_tree)}",
            f"d2={rational_text(obj.d2)}",
            f"path_r2={rational_text(obj.path_r2)}",
            f"beats_path={_bool_text(obj.beats_path)}",
        ]
        rows = [
            [str(k), rational_text(wk), rational_text(rk)]
            for k, (wk, rk) in enumerate(zip(obj.wiener_k, obj.r_k))
        ]
        return _csv_lines("ratio", ["k", "wiener_k", "r_k"], rows, comments)
    if isinstance(obj, MinimizerReport):
        base = [
            str(obj.order),
            obj.class_description,
            rational_text(obj.min_ratio),
            str(obj.trees_scanned),
        ]
        rows = [base + [w.decode("ascii")] for w in obj.witnesses]
        if not rows:
            rows = [base + [""]]
        return _csv_lines(
            "search",
            ["order", "class_description", "min_ratio", "trees_scanned",
             "witness"],
            rows,
        )
    if isinstance(obj, ThresholdReport):
        comments = [
            f"family_case={obj.family_case}",
            f"smallest_passing_a={obj.smallest_passing_a}",
        ]
        rows = [[str(a), rational_text(gap)] for a, gap in obj.per_a_gap]
        return _csv_lines("scan", ["a", "gap"], rows, comments)
    if isinstance(obj, SubdividedQuipuCheck):
        rows = [[
            str(obj.a),
            str(obj.n),
            rational_text(obj.r2_ua),
            rational_text(obj.r2_path),
            _bool_text(obj.holds),
        ]]
        return _csv_lines(
            "ua-check", ["a", "n", "r2_ua", "r2_path", "holds"], rows
        )
    if isinstance(obj, SubdividedQuipuDeviation):
        rows = [[
            str(obj.a),
            str(obj.w_ua),
            str(obj.d2_ua),
            rational_text(obj.w_dev),
            rational_text(obj.d2_dev),
        ]]
        return _csv_lines(
            "ua-deviation", ["a", "w_ua", "d2_ua", "w_dev", "d2_dev"], rows
        )
    raise TypeError(f"no CSV form for {type(obj).__name__}")


def checks_csv(checks: list[CheckResult]) -> str:
    rows = [[c.name, _bool_text(c.ok), c.detail] for c in checks]
    return _csv_lines("verify", ["check", "ok", "detail"], rows)


def wiener_csv(value: int, order: int) -> str:
    return _csv_lines(
        "wiener", ["order", "wiener"], [[str(order), str(value)]]
    )


# ----------------------------------------------------------- per-kind text


def report_text(obj) -> str:
    if isinstance(obj, RatioReport):
        lines = [
            f"order {obj.order} ({'tree' if obj.is_tree else 'not a tree'})",
            f"W = {obj.wiener}",
        ]
        for k in range(1, len(obj.wiener_k)):
            wk = obj.wiener_k[k]
            if wk is None:
                lines.append(f"W_{k} undefined (iterate vanished)")
            else:
                lines.append(
                    f"W_{k} = {wk}   R_{k} = {rational_text(obj.r_k[k])}"
                )
        if obj.d2 is not None:
            lines.append(f"D_2 = {obj.d2}")
        if obj.path_r2 is not None:
            lines.append(f"R_2(path of order {obj.order}) = "
                         f"{rational_text(obj.path_r2)}")
        if obj.beats_path is not None:
            verdict = "beats" if obj.beats_path else "does not beat"
            lines.append(f"{verdict} the path of its order")
        return "\n".join(lines) + "\n"
    if isinstance(obj, MinimizerReport):
        lines = [
            f"order {obj.order}, {obj.class_description}",
            f"trees scanned: {obj.trees_scanned}",
            f"min R_2 = {rational_text(obj.min_ratio) or 'undefined (empty class)'}",
            f"witnesses ({len(obj.witnesses)}):",
        ]
        lines += [f"  {w.decode('ascii')}" for w in obj.witnesses]
        return "\n".join(lines) + "\n"
    if isinstance(obj, ThresholdReport):
        lines = [
            f"family case {obj.family_case}",
            f"smallest passing a: {obj.smallest_passing_a}",
        ]
        lines += [
            f"  a={a}  gap = {rational_text(gap)}  ({float(gap):+.6f})"
            for a, gap in obj.per_a_gap
        ]
        return "\n".join(lines) + "\n"
    if isinstance(obj, SubdividedQuipuCheck):
        verdict = "holds" if obj.holds else "fails"
        return (
            f"a = {obj.a}, order n = {obj.n}\n"
            f"R_2(U_a)  = {rational_text(obj.r2_ua)}\n"
            f"R_2(P_n)  = {rational_text(obj.r2_path)}\n"
            f"R_2(U_a) < R_2(P_n) {verdict}\n"
        )
    if isinstance(obj, SubdividedQuipuDeviation):
        return (
            f"a = {obj.a}\n"
            f"W(U_a)  = {obj.w_ua}   relative deviation from (2/3)a^5: "
            f"{float(obj.w_dev):+.6f}\n"
            f"D2(U_a) = {obj.d2_ua}   relative deviation from (1/6)a^4: "
            f"{float(obj.d2_dev):+.6f}\n"
        )
    raise TypeError(f"no text form for {type(obj).__name__}")


def checks_text(checks: list[CheckResult]) -> str:
    lines = []
    for c in checks:
        mark = "PASS" if c.ok else "FAIL"
        lines.append(f"[{mark}] {c.name} ({c.detail})")
    lines.append(f"{sum(c.ok for c in checks)}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
