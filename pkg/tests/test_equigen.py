from itertools import product as cartesian
from math import gcd

import pytest
from hypothesis import given, strategies as st

import oracles
from monored.equigen import (
    ExponentSet,
    all_sets,
    bits,
    bounds,
    from_ideal,
    k_fold,
    masiproves_formula,
    members_of,
    multiplicity,
    r_equigen,
    redone_characterize,
    somayeh_family,
    sumset,
    sunshine_classify,
    to_ideal,
)
from monored.monomial import ParseError, parse_ideal, product
from monored.reduction import CapExceeded, FramedIdeal, NotInFrame, reduction_number


def S(g, *ms):
    return ExponentSet.of(g, [0, g, *ms])


def test_exponent_set_validation():
    with pytest.raises(ValueError):
        ExponentSet.of(4, [0, 1])
    with pytest.raises(ValueError):
        ExponentSet.of(4, [1, 4])
    with pytest.raises(ValueError):
        ExponentSet.of(4, [0, 4, 6])
    A = S(6, 2, 4)
    assert A.members == [0, 2, 4, 6] and len(A) == 4 and A.gcd == 2
    assert A.scaled_down() == S(3, 1, 2)
    assert A.record() == {"g": 6, "members": [0, 2, 4, 6]}


def test_parse_set():
    assert ExponentSet.parse("3:0,1,3") == S(3, 1)
    assert ExponentSet.parse("5:2") == S(5, 2)
    for bad in ["x:1", "3:1,4", "0:", "3:a"]:
        with pytest.raises(ParseError):
            ExponentSet.parse(bad)


def test_all_sets_counts():
    assert [len(list(all_sets(g))) for g in range(1, 8)] == [1, 2, 4, 8, 16, 32, 64]
    assert list(all_sets(1)) == [S(1)]


@given(st.sets(st.integers(0, 30), max_size=8), st.sets(st.integers(0, 30), max_size=8))
def test_sumset_matches_python_sets(A, B):
    assert set(members_of(sumset(bits(A), bits(B)))) == oracles.set_sum(A, B)


def test_sumset_examples():
    assert members_of(sumset(bits([0, 1, 3]), bits([0, 1, 3]))) == [0, 1, 2, 3, 4, 6]
    assert members_of(k_fold(bits([0, 3]), 2)) == [0, 3, 6]
    assert k_fold(bits([0, 2, 5]), 1) == bits([0, 2, 5])
    assert k_fold(bits([0, 2, 5]), 0) == 1


def test_to_ideal_examples():
    assert to_ideal(S(3, 1), 3, 3).ideal == parse_ideal("x^3 + x*y^2 + y^3")
    assert to_ideal(S(3, 2), 3, 3).ideal == parse_ideal("x^3 + x^2*y + y^3")
    assert to_ideal(S(4, 2), 4, 8).ideal == parse_ideal("x^4 + x^2*y^4 + y^8")
    with pytest.raises(NotInFrame):
        to_ideal(S(4, 2), 4, 6)


def test_round_trip():
    for g in range(1, 11):
        for A in all_sets(g):
            for a, b in [(g, g), (2 * g, 3 * g), (3 * g, g)]:
                assert from_ideal(to_ideal(A, a, b)) == A


def test_from_ideal_rejects_off_segment():
    with pytest.raises(ValueError):
        from_ideal(FramedIdeal(parse_ideal("x^4 + y^8 + x^3*y^3"), 4, 8))
    with pytest.raises(ValueError):
        from_ideal(FramedIdeal(parse_ideal("x^6 + y^4 + x^2*y^3"), 6, 4))


def test_sumset_is_ideal_product():
    for g in range(1, 9):
        sets = list(all_sets(g))
        for A, B in cartesian(sets, sets):
            C = sumset(A.mask, B.mask)
            top = 2 * g
            prod = product(to_ideal(A, g, g).ideal, to_ideal(B, g, g).ideal)
            want = sorted((i, top - i) for i in members_of(C))
            assert sorted(map(tuple, prod.gens)) == want


@pytest.mark.parametrize("A, r", [
    (S(3, 1), 2),
    (S(5, 1, 2, 3, 4), 1),
    (S(7), 0),
    (S(6, 2, 6), 2),
    (S(6, 1), 5),
])
def test_r_equigen_examples(A, r):
    assert r_equigen(A) == r
    assert oracles.set_r(set(A.members), A.g) == r


def test_r_equigen_matches_plain_sets():
    for g in range(1, 11):
        for A in all_sets(g):
            assert r_equigen(A) == oracles.set_r(set(A.members), g)


def test_r_equigen_cap():
    with pytest.raises(CapExceeded):
        r_equigen(S(6, 1), cap=3)


def test_theorem_checks_exhaustive_small():
    for g in range(1, 11):
        for A in all_sets(g):
            r = r_equigen(A)
            mult, size = bounds(A)
            assert r < mult == multiplicity(A) == g // A.gcd
            assert r <= size
            assert (r == 1) == redone_characterize(A)
            assert (r == g - 1) == sunshine_classify(A)
            assert r == r_equigen(A.scaled_down())


def test_progression_test_examples():
    assert redone_characterize(S(6, 2, 4))
    assert not redone_characterize(S(6, 2))
    assert r_equigen(S(6, 2)) == 2
    assert not redone_characterize(S(6))


def test_three_element_formula():
    assert masiproves_formula(6, 4) == 2
    assert masiproves_formula(5, 2) == 4
    assert masiproves_formula(8, 4) == 1
    assert r_equigen(S(8, 4)) == 1
    for g in range(2, 21):
        for e in range(1, g):
            assert masiproves_formula(g, e) == r_equigen(S(g, e)) == g // gcd(e, g) - 1
    for e in (0, 5, 7):
        with pytest.raises(ValueError):
            masiproves_formula(5, e)


def test_interval_family():
    assert somayeh_family(5, 3) == S(5, 1, 4)
    assert somayeh_family(3, 1) == S(3, 1, 2)
    assert somayeh_family(4, 3) == S(4, 1)
    for g in range(2, 11):
        for j in range(1, g):
            assert r_equigen(somayeh_family(g, j)) == j
    with pytest.raises(ValueError):
        somayeh_family(4, 4)


def test_maximal_classification_examples():
    assert sunshine_classify(S(6, 1)) and r_equigen(S(6, 1)) == 5
    assert not sunshine_classify(S(6, 2))
    assert sunshine_classify(S(1)) and r_equigen(S(1)) == 0


def test_bounds_examples():
    assert multiplicity(S(6, 2)) == 3 and bounds(S(6, 2)) == (3, 2)
    assert multiplicity(S(9)) == 1
    assert bounds(S(5, 1)) == (5, 4) and r_equigen(S(5, 1)) == 4


def test_sumset_agrees_with_ideal_powers():
    for g in range(1, 6):
        for A in all_sets(g):
            r = r_equigen(A)
            for a, b in [(g, g), (2 * g, 3 * g)]:
                assert reduction_number(to_ideal(A, a, b)).r == r
