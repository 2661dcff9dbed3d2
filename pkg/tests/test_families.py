import io
import json

import pytest
from hypothesis import given, strategies as st

from scg import oracles
from scg.errors import DuplicateRelator, SchemaError, WordSyntaxError
from scg.families import (
    FamilySpec,
    Presentation,
    SetSpec,
    build_b_power,
    build_bowditch,
    build_wise_chong,
    dumps_presentation,
    explicit_presentation,
    load_presentation,
    presentation_from_json,
    quotient_presentation,
    save_presentation,
    wise_chong_length,
    wise_chong_presentation,
)
from scg.words import cyclic_normalize, parse_word, primitive_root, render


def test_wise_chong_examples():
    assert build_wise_chong(1, 100).length == 10900
    w = build_wise_chong(1, 2)
    assert w == cyclic_normalize(parse_word("a^-1 b^-4 a b^4 a^-2 b^-4 a^2 b^4"))
    assert w.length == 22 == len(oracles.decompress(w))
    w0 = build_wise_chong(0, 1)
    assert w0 == cyclic_normalize(parse_word("a^-1 b^-2 a b^2"))
    assert w0.length == 6


@pytest.mark.parametrize("n", range(9))
def test_length_formula(n):
    assert build_wise_chong(n, 100).length == 10100 + 200 * 2 ** 2 ** n == wise_chong_length(n)


def test_b_power_examples():
    assert render(build_b_power(0).word) == "b^2"
    assert build_b_power(2).length == 16
    q, e = primitive_root(build_b_power(3))
    assert (render(q.word), e) == ("b", 256)


def test_bowditch_examples():
    r = build_bowditch(1)
    assert r == cyclic_normalize(parse_word(" ".join(["a^4 b^4"] * 7)))
    assert r.length == 56
    tf = build_bowditch(1, torsion_free=True)
    assert tf == cyclic_normalize(parse_word("a^5 b^4 " + " ".join(["a^4 b^4"] * 11)))
    assert tf.length == 97
    flat = [("a", 1)] + [(g, 1) for _ in range(12) for g in "aaaabbbb"]
    assert oracles.same_cyclic_word(oracles.cyclic_reduce_letters(flat), oracles.decompress(tf))
    assert build_bowditch(0) == cyclic_normalize(parse_word(" ".join(["a^2 b^2"] * 7)))


def test_presentation_json_example():
    text = '{"generators":["a","b"],"relators":[{"kind":"wise-chong","n":3,"top":100}],"lambda":"1/6"}'
    p = load_presentation(io.StringIO(text))
    rels = p.enumerate_relators()
    assert [r.length for r in rels] == [10100 + 200 * 256]


def test_duplicate_relator_rejected():
    data = {"generators": ["a", "b"], "relators": [
        {"kind": "explicit", "word": "b^-16"},
        {"kind": "b-power", "k": 2}]}
    with pytest.raises(DuplicateRelator):
        presentation_from_json(data)
    rotated = {"generators": ["a", "b"], "relators": [
        {"kind": "explicit", "word": render(build_wise_chong(0, 2).rotation(3, 1))},
        {"kind": "wise-chong", "n": 0, "top": 2}]}
    with pytest.raises(DuplicateRelator):
        presentation_from_json(rotated)


def test_empty_relator_list_is_free_group():
    p = presentation_from_json({"generators": ["a", "b"], "relators": []})
    assert p.enumerate_relators() == []
    assert p.is_finite


@pytest.mark.parametrize("bad", [
    [],
    {"generators": "ab"},
    {"generators": ["a", "b"], "relators": [{"kind": "nope"}]},
    {"generators": ["a", "b"], "relators": [{"kind": "wise-chong"}]},
    {"generators": ["a", "b"], "relators": [{"kind": "wise-chong", "n": "1"}]},
    {"generators": ["a", "b"], "relators": [{"kind": "explicit", "word": "a c"}]},
    {"generators": ["a", "b"], "relators": [{"kind": "explicit", "word": "a a^-1"}]},
    {"generators": ["a", "b"], "lambda": 0.5},
    {"generators": ["a", "a"]},
    {"generators": ["a", "b"], "extra": 1},
])
def test_schema_errors(bad):
    with pytest.raises((SchemaError, WordSyntaxError)):
        presentation_from_json(bad)


def test_enumerate_evens_bounded():
    p = wise_chong_presentation(SetSpec.parse("evens"))
    rels = p.enumerate_relators(10**6)
    assert rels == [build_wise_chong(0), build_wise_chong(2)]
    assert wise_chong_length(4) > 10**6
    assert p.enumerate_relators(0) == []
    with pytest.raises(SchemaError):
        p.enumerate_relators()


def test_quotient_relators():
    rels = quotient_presentation([3, 4], 5).enumerate_relators()
    assert rels == [build_wise_chong(3), build_wise_chong(4), build_b_power(5)]
    assert rels[-1].length == 2**32


@given(st.lists(st.integers(0, 6), unique=True, max_size=5), st.integers(0, 200000))
def test_enumeration_sorted_and_complete(indices, bound):
    p = wise_chong_presentation(sorted(indices), top=10)
    rels = p.enumerate_relators(bound)
    lengths = [r.length for r in rels]
    assert lengths == sorted(lengths)
    expected = sorted(wise_chong_length(n, 10) for n in indices if wise_chong_length(n, 10) <= bound)
    assert lengths == expected


def test_predicate_family_entry_matches_list():
    infinite = presentation_from_json({"generators": ["a", "b"], "relators": [
        {"kind": "wise-chong", "set": "odds", "top": 5}]})
    assert not infinite.is_finite
    assert infinite.enumerate_relators(10**5) == wise_chong_presentation([1, 3], 5).enumerate_relators()


@pytest.mark.parametrize("text, first", [
    ("list:0,2,5", (0, 2, 5)),
    ("evens;depth:6", (0, 2, 4, 6)),
    ("odds;depth:7", (1, 3, 5, 7)),
    ("all;depth:3", (0, 1, 2, 3)),
    ("ap:2,3;depth:11", (2, 5, 8, 11)),
    ("list:", ()),
])
def test_setspec_parse(text, first):
    s = SetSpec.parse(text)
    assert s.truncate(None) == first
    assert SetSpec.parse(str(s)) == s
    assert all(s.contains(v) for v in first)


@pytest.mark.parametrize("bad", ["list:3,1", "primes", "ap:1,0", "evens;deep:3", "list:a"])
def test_setspec_errors(bad):
    with pytest.raises(SchemaError):
        SetSpec.parse(bad)


@pytest.mark.parametrize("p", [
    wise_chong_presentation([1, 2], top=7),
    wise_chong_presentation(SetSpec.parse("evens;depth:4")),
    quotient_presentation([0, 1], 3, top=5),
    explicit_presentation(["a b a^-1 b^-1", "c^3"]),
    Presentation(("a", "b"), (FamilySpec("bowditch", n=1), FamilySpec("bowditch-tf", n=2)), "1/8"),
])
def test_save_load_round_trip(p, tmp_path):
    path = tmp_path / "p.json"
    save_presentation(p, path)
    q = load_presentation(path)
    assert q == p
    assert dumps_presentation(q) == path.read_text(encoding="utf-8")
    assert json.loads(dumps_presentation(q)) == p.to_json()
