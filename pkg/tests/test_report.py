import json

from hypothesis import given, strategies as st

from quasibgg.charring import LaurentInt
from quasibgg.report import Case, VerificationReport
from quasibgg.serialize import dumps, formal_from_json, formal_to_json, laurent_from_json, laurent_to_json
from quasibgg.charring import FormalChar


def test_failure_always_has_witness():
    c = Case("x", {}, False)
    assert c.witness is not None
    assert "witness" in c.to_json()


def test_report_roundtrip():
    rep = VerificationReport("demo", [Case("a", {"k": 1}, True), Case("b", {}, False, {"r": [1]})],
                             12.5, ["big: skipped"])
    data = json.loads(rep.dumps(timing=True))
    back = VerificationReport.from_json(data)
    assert back.to_json(timing=True) == rep.to_json(timing=True)
    assert not back.passed
    assert back.summary_line() == "FAIL demo: 1/2 cases"


def test_timing_is_opt_in():
    rep = VerificationReport("demo", [], 3.0)
    assert "timing_ms" not in rep.to_json()
    assert rep.passed


def test_big_integers_are_strings():
    big = 3**100
    data = formal_to_json(FormalChar.monomial((1, 2), 0, big))
    assert data[0]["coef"] == str(big)
    assert formal_from_json(data) == FormalChar.monomial((1, 2), 0, big)


@given(st.dictionaries(st.integers(-9, 9), st.integers(-10**30, 10**30), max_size=6))
def test_laurent_roundtrip(d):
    x = LaurentInt(d)
    assert laurent_from_json(json.loads(json.dumps(laurent_to_json(x)))) == x


def test_dumps_is_sorted():
    assert dumps({"b": 1, "a": 2}) == '{"a":2,"b":1}'
