import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from scg import oracles
from scg.families import (
    SetSpec,
    bowditch_presentation,
    build_b_power,
    build_wise_chong,
    explicit_presentation,
    quotient_presentation,
    wise_chong_presentation,
)
from scg.pieces import longest_common_factor, max_piece, verify_c_prime
from scg.words import CompressedWord, cyclic_normalize, parse_word

from .conftest import random_cyclic, random_word, words


def W(text):
    return parse_word(text)


def test_lcf_w2_w1_top100():
    piece, _, _ = longest_common_factor(build_wise_chong(2), build_wise_chong(1))
    assert piece == W("b^-4 a^100 b^4")
    assert piece.length == 108


def test_lcf_disjoint_runs():
    assert longest_common_factor(cyclic_normalize(W("b^16")), W("a^3")) is None


def test_lcf_w2_with_itself_matches_letter_scan():
    w = build_wise_chong(2, 7)
    assert w.length == 280
    piece, _, _ = longest_common_factor(w, w)
    x = oracles.decompress(w)
    assert piece.length == oracles.oracle_lcf(x, x, True, True) == 280


def test_lcf_linear_against_oracle(rng):
    for _ in range(800):
        u = random_word(rng, 14)
        v = random_cyclic(rng, 14)
        found = longest_common_factor(u, v)
        got = 0 if found is None else found[0].length
        assert got == oracles.oracle_lcf(oracles.decompress(u), oracles.decompress(v), False, True)
        if found:
            piece, occ_u, _ = found
            start = sum(abs(e) for _, e in u.syllables[:occ_u.syllable]) + occ_u.offset
            assert oracles.decompress(u)[start:start + got] == oracles.decompress(piece)


@pytest.mark.parametrize("n, m", [(2, 1), (3, 1), (3, 2)])
def test_cross_piece_shape_top100(n, m):
    rep = max_piece(build_wise_chong(n), build_wise_chong(m))
    e = 2 ** 2 ** m
    assert rep.length == 100 + 2 * e
    assert cyclic_normalize(rep.piece) == cyclic_normalize(W(f"b^-{e} a^100 b^{e}"))


@pytest.mark.parametrize("n, k", [(0, 1), (1, 3), (2, 4)])
def test_piece_with_b_power(n, k):
    rep = max_piece(build_wise_chong(n), build_b_power(k))
    assert rep.piece.syllables in ((("b", 2 ** 2 ** n),), (("b", -(2 ** 2 ** n)),))


def test_torus_relator_self_piece():
    rep = max_piece(W("a b a^-1 b^-1"), None, same_relator=True)
    assert rep.length == 1 == oracles.oracle_max_piece(W("a b a^-1 b^-1"), None, True)[0]
    assert rep.ratio == Fraction(1, 4)


@pytest.mark.parametrize("e, expected", [(2, 1), (4, 3)])
def test_bowditch_self_pieces_under_rotation_identification(e, expected):
    # (a^e b^e)^7: the full period a^e b^e recurs only through the Z_7 rotation
    r = cyclic_normalize(CompressedWord([("a", e), ("b", e)] * 7))
    rep = max_piece(r, None, same_relator=True)
    assert rep.length == oracles.oracle_max_piece(r, None, True)[0] == expected


def test_pieces_symmetric(rng):
    for _ in range(200):
        r1, r2 = random_cyclic(rng, 12), random_cyclic(rng, 12)
        a, b = max_piece(r1, r2), max_piece(r2, r1)
        assert (a and a.length) == (b and b.length)


def test_adding_relator_never_lowers_ratio(rng):
    for _ in range(60):
        ws = []
        while len(ws) < 3:
            w = random_cyclic(rng, 10)
            if all(oracles.same_cyclic_word(oracles.decompress(w), oracles.decompress(x)) is False
                   and oracles.same_cyclic_word(oracles.decompress(w.inverse()), oracles.decompress(x)) is False
                   for x in ws):
                ws.append(w)
        small = verify_c_prime(explicit_presentation([w.word for w in ws[:2]])).max_ratio
        big = verify_c_prime(explicit_presentation([w.word for w in ws])).max_ratio
        assert big >= small


def test_verify_top100_set_123():
    rep = verify_c_prime(wise_chong_presentation([1, 2, 3]))
    assert rep.c_prime
    # the self-piece a^-99 b^-4 a^99 inside w_1 beats every cross-pair piece
    assert rep.max_ratio == Fraction(2 * 99 + 4, 10900) == Fraction(101, 5450)
    assert rep.max_ratio > Fraction(612, 61300)
    assert rep.complete


@pytest.mark.parametrize("top", [8, 12, 20])
def test_self_piece_formula_against_oracle(top):
    w = build_wise_chong(1, top)
    expect = 2 * (top - 1) + 4
    assert max_piece(w, None, same_relator=True).length == expect
    assert oracles.oracle_max_piece(w, None, True)[0] == expect


def test_verify_torus_fails():
    rep = verify_c_prime(explicit_presentation(["a b a^-1 b^-1"]))
    assert not rep.c_prime
    assert rep.max_ratio == Fraction(1, 4)
    assert rep.witness.length == 1


def test_verify_G6():
    assert verify_c_prime(quotient_presentation([3, 4, 5], 6)).c_prime


def test_verify_bowditch():
    rep = verify_c_prime(bowditch_presentation([0, 1, 2]))
    assert rep.c_prime and rep.max_ratio == Fraction(1, 7)


def test_verify_infinite_needs_bound():
    rep = verify_c_prime(wise_chong_presentation(SetSpec.parse("odds"), top=7), max_length=10**4)
    assert not rep.complete
    assert rep.checked_up_to_length == 10**4


def test_verify_workers_same_report():
    p = wise_chong_presentation([0, 1, 2], top=8)
    assert verify_c_prime(p).to_json() == verify_c_prime(p, workers=2).to_json()


def test_report_json_shape():
    out = verify_c_prime(wise_chong_presentation([1, 2], top=7)).to_json()
    assert out["lambda"] == "1/6" and out["c_prime"] is True
    assert out["max_ratio"] == "1/7"
    assert set(out["witness"]) >= {"piece", "occ1", "occ2"}


@given(words, words)
@settings(max_examples=200)
def test_lcf_agrees_with_oracle_property(u, v):
    cv = cyclic_normalize(v)
    if not cv.syllables:
        return
    found = longest_common_factor(u, cv)
    got = 0 if found is None else found[0].length
    assert got == oracles.oracle_lcf(oracles.decompress(u), oracles.decompress(cv), False, True)


def test_max_piece_random_against_oracle():
    rng = random.Random(11)
    for _ in range(300):
        r1 = random_cyclic(rng, 14)
        r2 = random_cyclic(rng, 14)
        for same in (True, False):
            rep = max_piece(r1, r2, same_relator=same)
            assert (0 if rep is None else rep.length) == oracles.oracle_max_piece(r1, r2, same)[0]
