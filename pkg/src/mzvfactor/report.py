"""Structured verification records and their JSON / CSV / text emission.

A record passes exactly when |observed - expected| <= certified_error +
tolerance; that comparison is done in exact rational arithmetic when the
record is built, never re-derived from the formatted strings.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .numeric import frac_to_decimal

DECIMAL_PLACES = 45

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_COUNTEREXAMPLE = "counterexample"

FIELDS = ["claim_id", "params", "observed", "expected", "certified_error",
          "status", "artifact_path"]


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    params: dict
    observed: str
    expected: str
    certified_error: str
    status: str
    artifact_path: Optional[str] = None


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def make_record(claim_id: str, observed: Fraction, expected: Fraction,
                certified_error: Fraction, tolerance: Fraction,
                params: Optional[dict] = None,
                artifact_path: Optional[str] = None,
                counterexample_on_fail: bool = False) -> VerificationReport:
    ok = abs(observed - expected) <= certified_error + tolerance
    status = STATUS_PASS if ok else (
        STATUS_COUNTEREXAMPLE if counterexample_on_fail else STATUS_FAIL)
    p = dict(params or {})
    p.setdefault("tolerance", rational_str(tolerance))
    p.setdefault("observed_exact", rational_str(observed))
    p.setdefault("expected_exact", rational_str(expected))
    return VerificationReport(
        claim_id=claim_id,
        params=p,
        observed=frac_to_decimal(observed, DECIMAL_PLACES),
        expected=frac_to_decimal(expected, DECIMAL_PLACES),
        certified_error=frac_to_decimal(certified_error, DECIMAL_PLACES),
        status=status,
        artifact_path=artifact_path,
    )


def bool_record(claim_id: str, passed: bool, params: Optional[dict] = None,
                artifact_path: Optional[str] = None,
                counterexample_on_fail: bool = False) -> VerificationReport:
    return make_record(claim_id, Fraction(1 if passed else 0), Fraction(1),
                       Fraction(0), Fraction(0), params, artifact_path,
                       counterexample_on_fail)


def all_passed(records: list[VerificationReport]) -> bool:
    return all(r.status == STATUS_PASS for r in records)


def sort_records(records: list[VerificationReport]) -> list[VerificationReport]:
    return sorted(records, key=lambda r: r.claim_id)


def to_json_lines(records: list[VerificationReport]) -> str:
    out = []
    for r in sort_records(records):
        out.append(json.dumps({
            "claim_id": r.claim_id,
            "params": r.params,
            "observed": r.observed,
            "expected": r.expected,
            "certified_error": r.certified_error,
            "status": r.status,
            "artifact_path": r.artifact_path,
        }, sort_keys=True))
    return "\n".join(out) + "\n"


def to_csv(records: list[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in sort_records(records):
        w.writerow([r.claim_id, json.dumps(r.params, sort_keys=True), r.observed,
                    r.expected, r.certified_error, r.status, r.artifact_path or ""])
    return buf.getvalue()


def to_text(records: list[VerificationReport]) -> str:
    lines = []
    for r in sort_records(records):
        lines.append(f"[{r.status.upper():>4}] {r.claim_id}: observed={r.observed} "
                     f"expected={r.expected} certified_error={r.certified_error}")
        if r.artifact_path:
            lines.append(f"       artifact: {r.artifact_path}")
    return "\n".join(lines) + "\n"


def render(records: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return to_json_lines(records)
    if fmt == "csv":
        return to_csv(records)
    if fmt == "text":
        return to_text(records)
    raise ValueError(f"unknown output format {fmt!r}")


@dataclass
class RunConfig:
    """Parameters shared by the CLI commands; a suite reads what it needs."""
    command: str = ""
    suite: str = ""
    k: Optional[int] = None
    N: Optional[int] = None
    M: Optional[int] = None
    j: Optional[int] = None
    n_max: Optional[int] = None
    j_max: Optional[int] = None
    bound: Optional[int] = None
    x: Optional[Fraction] = None
    precision_bits: int = 128
    tolerance: Optional[Fraction] = None
    output_format: str = "text"
    output_path: Optional[str] = None
    seed: int = 0
    kind: str = "alpha"
    m_sweep: tuple[int, ...] = field(default_factory=tuple)
