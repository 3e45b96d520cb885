"""Report records: the pass rule, formats, and ordering."""

import json
from fractions import Fraction

from mzvfactor.report import (
    all_passed,
    bool_record,
    make_record,
    render,
    sort_records,
)


def test_status_rule_boundary():
    # pass exactly when |observed - expected| <= certified_error + tolerance
    r = make_record("x", Fraction(11, 10), Fraction(1), Fraction(1, 20), Fraction(1, 20))
    assert r.status == "pass"
    r = make_record("x", Fraction(11, 10), Fraction(1), Fraction(1, 20), Fraction(1, 21))
    assert r.status == "fail"


def test_counterexample_status():
    r = make_record("x", Fraction(1), Fraction(0), Fraction(0), Fraction(0),
                    counterexample_on_fail=True)
    assert r.status == "counterexample"


def test_bool_record():
    assert bool_record("b", True).status == "pass"
    assert bool_record("b", False).status == "fail"


def test_exact_values_survive_in_params():
    r = make_record("x", Fraction(1, 3), Fraction(1, 3), Fraction(0), Fraction(0))
    assert r.params["observed_exact"] == "1/3"
    assert r.status == "pass"


def test_json_lines_roundtrip():
    recs = [bool_record("b.two", True), bool_record("a.one", True)]
    lines = render(recs, "json").strip().splitlines()
    ids = [json.loads(line)["claim_id"] for line in lines]
    assert ids == ["a.one", "b.two"]   # canonical claim-id order


def test_csv_and_text_render():
    recs = [make_record("c", Fraction(2), Fraction(2), Fraction(0), Fraction(0))]
    csv_text = render(recs, "csv")
    assert csv_text.splitlines()[0].startswith("claim_id,")
    text = render(recs, "text")
    assert "[PASS] c:" in text


def test_all_passed():
    good = [bool_record("a", True)]
    bad = good + [bool_record("b", False)]
    assert all_passed(good) and not all_passed(bad)


def test_sort_is_stable_copy():
    recs = [bool_record("z", True), bool_record("a", True)]
    ordered = sort_records(recs)
    assert [r.claim_id for r in ordered] == ["a", "z"]
    assert [r.claim_id for r in recs] == ["z", "a"]
