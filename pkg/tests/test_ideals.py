import random

import pytest
from hypothesis import given, settings, strategies as st

from handleknot.diagram import wirtinger
from handleknot.fixtures import gamma3, kinoshita_presentation, lambert_diagram
from handleknot.groebner import groebner_mod_p, reduce_poly
from handleknot.ideals import (FULL, IdealGens, LambdaMatrix, _laurent_basis, alexander_report, delta, determinant,
                               elementary_ideal, ideal_contains, ideals_equal,
                               is_unit_ideal_laurent_mod_p, member_mod_p, principality_check,
                               seifert_presentation, simplify_matrix, symmetry_test, unitary_test)
from handleknot.laurent import (ONE, ZERO, LaurentPoly, involution_sigma, is_associate, parse_poly,
                                preferred_generator, sl2_substitute)
from handleknot.presentation import GroupPresentation, alexander_matrix

P = parse_poly
t1, t2 = LaurentPoly.mono(1, 0), LaurentPoly.mono(0, 1)
KINO_E2 = IdealGens.of(LaurentPoly.const(2), P("1+t1-t1*t2"))

UNIMODULAR = [((1, 0), (0, 1)), ((0, 1), (1, 0)), ((1, 1), (0, 1)), ((1, 0), (1, 1)), ((2, 1), (1, 1)),
              ((1, -1), (0, 1)), ((-1, 0), (0, 1)), ((0, -1), (1, 0)), ((3, 2), (1, 1)), ((1, 2), (1, 3))]


def lambert_f(r):
    s, t = t2, t1
    acc = ZERO
    for j in range(r - 1):
        acc = acc + (s * t ** -1) ** j
    return (1 - s) * t ** -1 * acc - 1


def test_elementary_ideal_examples():
    B = [[t2 - 1, 1 - t1]]
    assert elementary_ideal(B, 1) == IdealGens.of(t2 - 1, 1 - t1)
    assert elementary_ideal(B, 0).is_zero()
    assert elementary_ideal(B, 2) == FULL


def test_simplify_examples():
    B = simplify_matrix([[ONE, t1], [ZERO, t2 - 1]])
    assert B.rows == ((t2 - 1,),)
    M = [[t1 - 1, LaurentPoly.const(2)], [t2 + 1, t1 + t2]]
    assert simplify_matrix(M).rows == tuple(tuple(r) for r in M)


def test_lambert_matrix_simplifies_to_one_generator():
    B = simplify_matrix(LambdaMatrix.of(alexander_matrix(wirtinger(lambert_diagram(3))), 7))
    E2 = elementary_ideal(B, 2)
    assert len(E2.gens) == 1
    assert E2.gens[0] == P("s+t-1")


def test_delta_examples():
    assert delta(KINO_E2) == ONE
    f = P("1+t1-t1*t2")
    assert delta(IdealGens.of(f)) == preferred_generator(f)
    g, h = P("1+t2"), P("2-t1*t2")
    assert delta(IdealGens.of((t1 - 1) * g, (t1 - 1) * h)) == t1 - 1
    with pytest.raises(ValueError):
        delta(IdealGens())


def test_unitary_examples():
    assert unitary_test(KINO_E2)
    assert not unitary_test(IdealGens.of(t1 - 1))
    assert unitary_test(FULL)


def test_symmetry_examples():
    assert not symmetry_test(P("s+t-1"))
    assert symmetry_test(t1 + t1 ** -1)
    assert symmetry_test(LaurentPoly.const(7))


def test_groebner_examples():
    assert groebner_mod_p([{(1, 0): 1}, {(0, 1): 1}], 5) == [{(0, 1): 1}, {(1, 0): 1}]
    assert groebner_mod_p([{(0, 0): 1}], 7) == [{(0, 0): 1}]
    G = groebner_mod_p([{(2, 0): 1, (0, 1): -1}, {(1, 1): 1, (1, 0): -1}], 3)
    assert reduce_poly({(0, 2): 1, (0, 1): -1}, G, 3) == {}
    with pytest.raises(ValueError):
        groebner_mod_p([{(1, 0): 1}], 4)


def test_groebner_membership_matches_point_evaluation():
    # t2^2 - t2 vanishes on the zero set of t1^2 - t2, t1 t2 - t1 over F_3
    zeros = [(x, y) for x in range(3) for y in range(3)
             if (x * x - y) % 3 == 0 and (x * y - x) % 3 == 0]
    assert all((y * y - y) % 3 == 0 for _, y in zeros)


def test_unit_ideal_mod_p_examples():
    assert not is_unit_ideal_laurent_mod_p(KINO_E2, 2)
    assert is_unit_ideal_laurent_mod_p(IdealGens((t1,)), 3)
    assert is_unit_ideal_laurent_mod_p(IdealGens.of(LaurentPoly.const(3)), 2)
    with pytest.raises(ValueError):
        is_unit_ideal_laurent_mod_p(KINO_E2, 9)


def test_principality_examples():
    r = principality_check(KINO_E2)
    assert (r.verdict, r.witness) == ("No", 2)
    r = principality_check(IdealGens.of(lambert_f(2)))
    assert r.verdict == "Yes" and r.generator == P("s+t-1")
    r = principality_check(IdealGens.of(t1 - 1, (t1 - 1) * t2))
    assert r.verdict == "Yes" and r.generator == t1 - 1


def test_principality_certificate():
    # (t1 - 1, t2 - 1) contains no common factor but is not principal
    r = principality_check(IdealGens.of(t1 - 1, t2 - 1))
    assert r.verdict == "No"
    # (2 + t1, 3 + t1) = (1): delta 1, found by the cofactor search
    assert ideal_contains(IdealGens.of(t1 + 2, t1 + 3), ONE)


def test_seifert_examples():
    assert determinant(seifert_presentation([], [], [], 0, 0).rows) == ONE
    B = seifert_presentation([[0, 1], [0, 0]], [], [], 1, 0)
    assert B.rows == ((ZERO, -t1), (ONE, ZERO))
    assert is_associate(determinant(B.rows), t1)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=16, max_size=16))
def test_seifert_determinant_is_symmetric(xs):
    A11 = [xs[0:2], xs[2:4]]
    A12 = [xs[4:6], xs[6:8]]
    A22 = [xs[8:10], xs[10:12]]
    D = determinant(seifert_presentation(A11, A12, A22, 1, 1).rows)
    assert involution_sigma(D) == D * LaurentPoly.mono(-2, -2)


def test_alexander_report_examples():
    r = alexander_report(kinoshita_presentation())
    assert ideals_equal(r.E2, KINO_E2) is True
    assert r.delta2 == ONE and r.unitary
    assert (r.principal.verdict, r.principal.witness, r.symmetric) == ("No", 2, "NotApplicable")
    r = alexander_report(wirtinger(lambert_diagram(3)))
    assert r.principal.generator == P("s+t-1") and r.symmetric == "No"
    r = alexander_report(GroupPresentation(2, ()))
    assert r.E2 == FULL and r.delta2 == ONE
    assert (r.principal.verdict, r.principal.generator, r.symmetric) == ("Yes", ONE, "Yes")


def _random_poly(rng, terms=2):
    acc = ZERO
    for _ in range(rng.randint(0, terms)):
        acc = acc + LaurentPoly.mono(rng.randint(-1, 1), rng.randint(-1, 1), rng.choice([-2, -1, 1, 2]))
    return acc


def _random_matrix(rng, s, n, units=0.25):
    M = []
    for _ in range(s):
        M.append([LaurentPoly.mono(rng.randint(-1, 1), rng.randint(-1, 1), rng.choice([-1, 1]))
                  if rng.random() < units else _random_poly(rng) for _ in range(n)])
    return M


def test_shift_identity():
    rng = random.Random(7)
    for _ in range(50):
        s, n = rng.randint(1, 3), rng.randint(1, 3)
        B = _random_matrix(rng, s, n)
        for k in (1, 2):
            Bk = [row + [ZERO] * k for row in B]
            for d in range(0, n + 1):
                assert elementary_ideal(Bk, d + k) == elementary_ideal(B, d)


def _contained_mod_p(I, J, p):
    G = _laurent_basis(J, p)
    return all(member_mod_p(g, J, p, basis=G) for g in I.generators())


def test_simplify_preserves_elementary_ideals():
    rng = random.Random(11)
    checked = 0
    for _ in range(30):
        s, n = rng.randint(1, 3), rng.randint(1, 4)
        B = LambdaMatrix.of(_random_matrix(rng, s, n), n)
        S = simplify_matrix(B)
        for d in range(0, n + 1):
            I, J = elementary_ideal(B, d), elementary_ideal(S, d)
            if I.is_zero() or J.is_zero():
                assert I.is_zero() and J.is_zero()
                continue
            for p in (2, 3):
                assert _contained_mod_p(I, J, p) and _contained_mod_p(J, I, p)
            checked += 1
    assert checked > 10


def test_elementary_ideals_increase():
    rng = random.Random(3)
    for _ in range(20):
        s, n = rng.randint(1, 3), rng.randint(2, 3)
        B = _random_matrix(rng, s, n, units=0.1)
        for d in range(n):
            I, J = elementary_ideal(B, d), elementary_ideal(B, d + 1)
            if I.is_zero() or J.full:
                continue
            for p in (2, 3, 5):
                assert all(member_mod_p(g, J, p) for g in I.gens)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lambert_relations_agree(p):
    r = (p + 1) // 2
    s, t = t2, t1
    acc = ZERO
    for j in range(r - 1):
        acc = acc + (s * t ** -1) ** j
    g1 = (1 - t) * t ** -1 * acc - (s * t ** -1) ** (r - 1)
    g2 = (1 - s) * t ** -1 * acc - 1
    assert is_associate(g1, g2)
    assert is_associate(alexander_report(wirtinger(lambert_diagram(p))).principal.generator, g2)


def _verdicts(I):
    pr = principality_check(I) if not I.full else None
    sym = symmetry_test(pr.generator) if pr and pr.verdict == "Yes" else None
    return unitary_test(I), pr.verdict if pr else "full", sym


SL2_FIXTURES = {
    "kinoshita": KINO_E2,
    "lambert3": IdealGens.of(lambert_f(2)),
    "lambert5": IdealGens.of(lambert_f(3)),
}


@pytest.mark.parametrize("name", sorted(SL2_FIXTURES))
def test_verdicts_are_sl2_invariant(name):
    I = SL2_FIXTURES[name]
    base = _verdicts(I)
    for m in UNIMODULAR:
        J = IdealGens(tuple(sl2_substitute(g, m) for g in I.gens))
        assert _verdicts(J) == base, m


def test_gamma3_ideal_is_principal_not_symmetric():
    r = alexander_report(wirtinger(gamma3(3)))
    assert r.principal.verdict == "Yes" and r.symmetric == "No"
