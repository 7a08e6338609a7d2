import random
from itertools import combinations

import pytest

import oracles
from monored.closure import (
    closure,
    closure_3gen,
    minimal_one_oracle,
    violations,
)
from monored.monomial import MonomialIdeal, intersection, parse_ideal
from monored.reduction import (
    D_points,
    FramedIdeal,
    NotInFrame,
    in_D,
    reduction_number,
    three_gen_ideal,
)


def framed(text):
    return FramedIdeal.of(parse_ideal(text))


def gens(F):
    return sorted(map(tuple, F.ideal.gens))


def test_violations_examples():
    v = violations(framed("x^4 + y^8 + x^3*y^3"))
    assert [tuple(map(tuple, t)) for t in v] == [((3, 3), (3, 3), (2, 6))]
    assert violations(framed("x^4 + y^8 + x^3*y^3 + x^2*y^6")) == []
    with pytest.raises(NotInFrame):
        violations(framed("x^4 + y^8"))


def test_half_frame_generators_have_no_violations():
    for a in range(2, 9):
        for b in range(2, 9):
            half = [p for p in D_points(a, b) if 2 * p.c >= a and 2 * p.d >= b]
            for n in range(1, min(3, len(half)) + 1):
                for pts in combinations(half, n):
                    F = FramedIdeal(MonomialIdeal([(a, 0), (0, b), *pts]), a, b)
                    assert violations(F) == []


def test_violations_empty_iff_r_one():
    rnd = random.Random(2)
    for _ in range(80):
        a, b = rnd.randint(2, 7), rnd.randint(2, 7)
        pts = D_points(a, b)
        F = FramedIdeal(MonomialIdeal([(a, 0), (0, b)] + rnd.sample(pts, min(len(pts), rnd.randint(1, 3)))), a, b)
        assert (violations(F) == []) == (reduction_number(F).r == 1)


def test_closure_example():
    L, trace = closure(framed("x^4 + y^8 + x^3*y^3"))
    assert L.ideal == parse_ideal("x^4 + y^8 + x^3*y^3 + x^2*y^6")
    assert [tuple(m) for m in trace.added] == [(2, 6)]
    assert reduction_number(L).r == 1


def test_closure_fixes_r_one_and_J():
    F = framed("x^4 + y^8 + x^3*y^3 + x^2*y^6")
    assert closure(F)[0] == F
    J = framed("x^4 + y^8")
    assert closure(J)[0] == J and minimal_one_oracle(J) == J


def test_closure_3gen_examples():
    L, tr = closure_3gen(4, 8, (3, 3))
    assert tr.k == 3
    assert L.ideal == parse_ideal("x^4 + y^8 + x^3*y^3 + x^2*y^6")
    assert [(s.r, s.s) for s in tr.steps] == [(0, 0), (1, 0), (2, 1)]
    assert [(s.c, s.d) for s in tr.steps] == [(3, 3), (2, 6), (1, 1)]

    L, tr = closure_3gen(4, 8, (3, 5))
    assert tr.k == 2 and L.ideal == parse_ideal("x^4 + y^8 + x^3*y^5")
    assert (tr.steps[1].r, tr.steps[1].s) == (1, 1)

    with pytest.raises(NotInFrame):
        closure_3gen(4, 8, (1, 1))


def test_closure_3gen_half_point_stops_at_two():
    for a in range(2, 10):
        for b in range(2, 10):
            for p in D_points(a, b):
                if 2 * p.c >= a and 2 * p.d >= b:
                    L, tr = closure_3gen(a, b, p)
                    assert tr.k == 2 and L == three_gen_ideal(a, b, p)


def test_general_and_three_gen_agree():
    L1, _ = closure(framed("x^6 + y^6 + x*y^5"))
    L2, _ = closure_3gen(6, 6, (1, 5))
    assert L1 == L2
    for a in range(2, 11):
        for b in range(2, 11):
            for p in D_points(a, b):
                F = three_gen_ideal(a, b, p)
                L, _ = closure(F)
                L3, tr = closure_3gen(a, b, p)
                assert L == L3
                for st in tr.steps[:-1]:
                    assert st.r + st.s == st.i - 1
                    assert in_D(a, b, st.p)
                assert all(st.r + st.s >= st.i - 1 for st in tr.steps)
                assert tr.steps[-1].r + tr.steps[-1].s >= tr.k


def test_closure_invariants():
    rnd = random.Random(4)
    for _ in range(60):
        a, b = rnd.randint(2, 8), rnd.randint(2, 8)
        pts = D_points(a, b)
        F = FramedIdeal(MonomialIdeal([(a, 0), (0, b)] + rnd.sample(pts, min(len(pts), rnd.randint(1, 4)))), a, b)
        L, trace = closure(F)
        assert F.ideal <= L.ideal
        assert reduction_number(L).r == 1
        assert oracles.is_r_one(L.ideal.gens, a, b, 4 * max(a, b))
        assert closure(L)[0] == L
        assert closure(F, one_at_a_time=True)[0] == L
        for m in trace.added:
            assert 0 <= m.c < a and 0 <= m.d < b and b * m.c + a * m.d >= a * b


def test_oracle_examples():
    F = framed("x^4 + y^8 + x^3*y^3")
    assert minimal_one_oracle(F).ideal == parse_ideal("x^4 + y^8 + x^3*y^3 + x^2*y^6")
    G = framed("x^4 + y^8 + x^3*y^3 + x^2*y^6")
    assert minimal_one_oracle(G) == G
    H = framed("x^3 + y^5 + x^2*y^2")
    assert minimal_one_oracle(H) == closure(H)[0]
    assert gens(closure(H)[0]) == [(0, 5), (1, 4), (2, 2), (3, 0)]


def test_oracle_grid_guard():
    with pytest.raises(ValueError):
        minimal_one_oracle(framed("x^10 + y^10 + x^5*y^5"))


def test_closure_matches_oracle_three_generated():
    for a in range(2, 7):
        for b in range(2, 7):
            for p in D_points(a, b):
                F = three_gen_ideal(a, b, p)
                assert closure(F)[0] == minimal_one_oracle(F)


def _r_one_supersets(F):
    """Every r=1 ideal in the frame that contains I, by subset enumeration of the grid."""
    a, b = F.a, F.b
    grid = D_points(a, b)
    out = set()
    for n in range(len(grid) + 1):
        for extra in combinations(grid, n):
            L = MonomialIdeal([(a, 0), (0, b), *extra])
            if F.ideal <= L and oracles.is_r_one(L.gens, a, b, 3 * max(a, b)):
                out.add(L)
    return out


def test_intersection_of_r_one_supersets_has_r_one():
    for a, b, p in [(3, 3, (1, 2)), (3, 4, (1, 3)), (4, 3, (3, 1)), (2, 5, (1, 3))]:
        F = three_gen_ideal(a, b, p)
        sups = _r_one_supersets(F)
        assert sups
        for L1, L2 in combinations(sups, 2):
            M = intersection(L1, L2)
            assert oracles.is_r_one(M.gens, a, b, 3 * max(a, b))
        want = sups.pop()
        for L in sups:
            want = intersection(want, L)
        assert want == closure(F)[0].ideal
