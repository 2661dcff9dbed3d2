import random

import pytest
from hypothesis import given, strategies as st

from scg import oracles
from scg.families import SetSpec
from scg.related import (
    NatSet,
    affine_transform_check,
    compose_witness,
    divergence_profile,
    format_profile,
    length_spectrum,
    min_witness_k,
    raw_spectrum,
    related_via_k,
    sym_diff,
    vacuity_bound,
)

nat_sets = st.lists(st.integers(1, 400), max_size=8).map(NatSet)


def test_natset():
    assert NatSet([5, 1, 5]) == (1, 5)
    with pytest.raises(ValueError):
        NatSet([0, 3])


def test_related_examples():
    w = related_via_k([2, 16], [4], 3)
    assert w and w.is_valid()
    assert w.forward == ((2, None), (16, None))
    fail = related_via_k([2, 16], [4], 2)
    assert not fail
    assert (fail.element, fail.direction) == (16, "forward")
    assert "16" in str(fail)
    same = [3, 50, 999]
    assert related_via_k(same, same, 1).forward == ((3, None), (50, 50), (999, 999))
    with pytest.raises(ValueError):
        related_via_k([1], [1], 0)


def test_endpoints_included():
    # 12 = 3 * 4 sits on the interval boundary
    assert related_via_k([100], [300], 3)
    assert related_via_k([300], [100], 3)
    assert not related_via_k([301], [100], 3)


def test_min_k_examples():
    assert min_witness_k([2, 16], [4]) == 3
    assert min_witness_k([2, 16], [4, 256]) == 15
    assert min_witness_k([7, 70], [7, 70]) == 1
    assert min_witness_k([], []) == 1


def test_compose_examples():
    a = [3, 40, 900]
    w = compose_witness(related_via_k(a, a, 1), related_via_k(a, a, 1))
    assert w.k == 1 and w.is_valid()
    w = compose_witness(related_via_k([10], [20], 2), related_via_k([20], [40], 2))
    assert w.k == 4 and w.is_valid()
    assert w.note == "composed"
    with pytest.raises(ValueError):
        compose_witness(related_via_k([10], [20], 2), related_via_k([21], [40], 2))


@pytest.mark.parametrize("S, n", [([5, 10], 3), ([1], 1)])
def test_affine_examples(S, n):
    rep = affine_transform_check(S, n)
    assert rep.ok


def test_spectra():
    assert length_spectrum([1], 100) == (10900,)
    assert length_spectrum([0, 1], 1) == (6, 10)
    assert length_spectrum([], 100) == ()
    assert raw_spectrum(SetSpec.parse("evens"), 4) == (2, 16, 65536)
    with pytest.raises(ValueError):
        raw_spectrum(SetSpec.parse("evens"))


def test_profile_raw():
    rows = divergence_profile(SetSpec.parse("evens"), SetSpec.parse("odds"), 4)
    assert [r.min_k for r in rows][2:] == [3, 15, 255]
    for d in range(2, 5):
        assert rows[d].min_k == 2 ** 2 ** (d - 1) - 1
    same = divergence_profile(SetSpec.parse("evens"), SetSpec.parse("evens"), 4, mode="spectrum")
    assert [r.min_k for r in same] == [1] * 5
    table = format_profile(rows)
    assert table.splitlines()[0].split() == ["depth", "min_k", "left_size", "right_size"]


def test_profile_spectrum_vs_raw():
    evens, odds = SetSpec.parse("evens"), SetSpec.parse("odds")
    for d in range(2, 5):
        L, Lp = length_spectrum(evens, 100, d), length_spectrum(odds, 100, d)
        R, Rp = raw_spectrum(evens, d), raw_spectrum(odds, d)
        k_raw = min_witness_k(R, Rp)
        # |w_n| = 10100 + 200 E_n lies within a factor 10100/200 + 200 of E_n;
        # chaining through the raw witness bounds the spectrum witness
        c = 10300
        up = related_via_k(L, R, c)
        mid = related_via_k(R, Rp, k_raw)
        down = related_via_k(Rp, Lp, c)
        assert up and mid and down
        chained = compose_witness(compose_witness(up, mid), down)
        assert chained.is_valid()
        assert min_witness_k(L, Lp) <= chained.k


def test_sym_diff():
    assert sym_diff([1, 2], [2, 3]) == (1, 3)
    assert sym_diff([4, 5], [4, 5]) == ()
    assert sym_diff(SetSpec.parse("evens"), SetSpec.parse("odds"), 5) == (0, 1, 2, 3, 4, 5)


@given(nat_sets, nat_sets, st.integers(1, 30))
def test_monotone_and_symmetric(L, Lp, k):
    here = bool(related_via_k(L, Lp, k))
    if here:
        assert related_via_k(L, Lp, k + 1)
    assert here == bool(related_via_k(Lp, L, k))
    assert here == oracles._related_literal(L, Lp, k)


@given(nat_sets, nat_sets)
def test_min_k_matches_scan(L, Lp):
    k = min_witness_k(L, Lp)
    assert k == oracles.oracle_min_k(L, Lp)
    assert k <= vacuity_bound(L, Lp)


@given(nat_sets)
def test_reflexive(L):
    w = related_via_k(L, L, 1)
    assert w and w.is_valid()


def test_compose_random_chains():
    rng = random.Random(12)
    done = 0
    while done < 200:
        A = NatSet(rng.randint(1, 3000) for _ in range(rng.randint(0, 6)))
        B = NatSet(max(1, a * rng.randint(1, 4) // rng.randint(1, 4)) for a in A)
        C = NatSet(max(1, b * rng.randint(1, 4) // rng.randint(1, 4)) for b in B)
        k1, k2 = min_witness_k(A, B), min_witness_k(B, C)
        w = compose_witness(related_via_k(A, B, k1), related_via_k(B, C, k2))
        assert w.is_valid() and w.k == k1 * k2
        assert related_via_k(A, C, k1 * k2)
        done += 1


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=10), st.integers(1, 20))
def test_affine_property(S, n):
    rep = affine_transform_check(S, n)
    assert rep.ok
    assert rep.scaled.is_valid() and rep.shifted.is_valid()
