"""Transcript records, rendering and lossless JSON-lines round trips."""

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedral_noether.cyclotomic import CyclotomicNumber
from dihedral_noether.ratfield.ratfunc import Ring
from dihedral_noether.replay.transcript import (KINDS, StepRecord, Transcript, parse_json_lines,
                                                render_value)

text = st.text(st.characters(blacklist_categories=("Cs",)), max_size=20)
records = st.builds(StepRecord, text, text, st.sampled_from(KINDS), text,
                    st.sampled_from(["pass", "fail"]),
                    st.dictionaries(text, text, max_size=3),
                    st.dictionaries(text, st.one_of(text, st.lists(text, max_size=3)), max_size=3))


@settings(max_examples=60, deadline=None)
@given(st.lists(records, max_size=6), st.integers(0, 99))
def test_json_lines_round_trip(recs, seed):
    t = Transcript("d6", recs, seed, {"search_bound": 3})
    back = parse_json_lines(t.to_json_lines())
    assert len(back) == 1 and back[0] == t
    assert back[0].to_json_lines() == t.to_json_lines()


def test_concatenated_transcripts_parse():
    a = Transcript("d6", [StepRecord("a", "L", "identity", "c", "pass")])
    b = Transcript("d9", [StepRecord("b", "L", "relation", "c", "fail")])
    back = parse_json_lines(a.to_json_lines() + b.to_json_lines())
    assert [t.target for t in back] == ["d6", "d9"]
    assert back[1].status == "fail"


def test_tampered_summary_is_rejected():
    t = Transcript("d6", [StepRecord("a", "L", "identity", "c", "pass")])
    lines = t.to_json_lines().splitlines()
    lines[0] = lines[0].replace('"pass"', '"fail"')
    with pytest.raises(ValueError):
        parse_json_lines("\n".join(lines))
    with pytest.raises(ValueError):
        parse_json_lines(lines[0])


def test_invalid_records():
    with pytest.raises(ValueError):
        StepRecord("a", "L", "guess", "c", "pass")
    with pytest.raises(ValueError):
        StepRecord("a", "L", "identity", "c", "maybe")


def test_status_and_counts():
    empty = Transcript("core")
    assert not empty.ok
    t = Transcript("core", [StepRecord("a", "L", "identity", "c", "pass"),
                            StepRecord("b", "L", "invariance", "c", "fail")])
    assert t.status == "fail" and t.counts() == {"pass": 1, "fail": 1, "total": 2}
    assert [r.id for r in t.failures()] == ["b"]
    assert t.kind_counts() == {"identity": 1, "invariance": 1}


def test_text_rendering_shows_failed_witnesses():
    t = Transcript("d9", [StepRecord("x", "L", "identity", "lhs = rhs", "fail", {},
                                     {"lhs": "1", "rhs": "2"})])
    out = t.to_text()
    assert "[FAIL] x  identity  lhs = rhs" in out
    assert "lhs: 1" in out and "rhs: 2" in out
    assert out.endswith("FAIL (0 passed, 1 failed, 1 claims)\n")
    with pytest.raises(ValueError):
        t.render("xml")


def test_render_value():
    R = Ring(["x"], 5)
    assert render_value(R.var("x") / 2) == "1/2*x"
    assert render_value(CyclotomicNumber.rational(5, 3)) == "3"
    assert render_value(CyclotomicNumber.zeta(5)) == "z@5"
    assert render_value([1, "a"]) == "[1, a]"


def test_summary_fields():
    t = Transcript("d10", [], 7, {"b": 1, "a": 2})
    line = json.loads(t.to_json_lines())
    assert line == {"type": "summary", "target": "d10", "status": "fail",
                    "counts": {"pass": 0, "fail": 0, "total": 0}, "kinds": {},
                    "engine_version": t.engine_version, "seed": 7, "bounds": {"a": 2, "b": 1}}
