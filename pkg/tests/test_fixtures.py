from itertools import product

import pytest

from handleknot.diagram import SpineDiagram, validate
from handleknot.fixtures import (CATALOG, build_family, build_fixture, build_tangle, cochran_orr_pattern,
                                 gamma4, kinoshita_presentation, obar_boundary, tangle_B, tangle_E,
                                 tangle_O, tangle_Obar)
from handleknot.freegroup import parse_word
from handleknot.presentation import deficiency
from handleknot.quandle import Z2_CYCLES, count_tangle_colorings, dihedral, phi_p

PRIMES = (3, 5)


def _count(t, p, z, colors):
    return count_tangle_colorings(t, dihedral(p), z, colors)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("p", PRIMES)
def test_lemma_E(q, p):
    t = tangle_E(q)
    for z in Z2_CYCLES:
        for a, b in product(range(p), repeat=2):
            full = q == p and z == (1, 1)
            assert _count(t, p, z, [a, b, a, b]) == (1 if full or a == b else 0)


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("p", PRIMES)
def test_lemma_O(q, p):
    t = tangle_O(q)
    for a, b in product(range(p), repeat=2):
        outs = {}
        for a2, b2 in product(range(p), repeat=2):
            n1 = _count(t, p, (1, 1), [a, b, a2, b2])
            n0 = _count(t, p, (0, 0), [a, b, a2, b2])
            assert n0 == (1 if a == b and a2 == b2 else 0)
            if p == q:
                assert n1 == (p if (a2, b2) == (a, b) else 0)
            elif n1:
                outs[a2, b2] = n1
        if p != q:
            assert list(outs.values()) == [1]
            (a2, b2), = outs
            if a == a2 or b == b2:
                assert a == a2 == b == b2


@pytest.mark.parametrize("q", [3, 5])
@pytest.mark.parametrize("p", PRIMES)
def test_lemma_Obar_single_cycles(q, p):
    t = tangle_Obar(q)
    for z in ((1, 0), (0, 1)):
        for a, c, d in product(range(p), repeat=3):
            n = _count(t, p, z, obar_boundary(a, a, c, d))
            if q == p:
                assert n == (p if c == d else 0)
            else:
                assert n == (1 if a == c == d else 0)


@pytest.mark.parametrize("q,p", [(3, 5), (5, 3)])
def test_lemma_Obar_both_cycles(q, p):
    # at q == p extra colorings appear (see the decisions ledger), so only q != p is asserted
    t = tangle_Obar(q)
    for a, b, c, d in product(range(p), repeat=4):
        n = _count(t, p, (1, 1), obar_boundary(a, b, c, d))
        assert n == (1 if a == d and b == c else 0)


@pytest.mark.parametrize("p", PRIMES)
def test_lemma_B(p):
    t = tangle_B()
    for a, b, c, d in product(range(p), repeat=4):
        n = _count(t, p, (1, 1), [a, c, b, d])
        if a == b and c == d:
            assert n == (p * p if p == 3 else 1)
        else:
            assert n == 0


FAMILY = {
    "Gamma1": lambda p: "3+t",
    "Gamma2": lambda p: "1+2t^2+t^4",
    "Gamma3": lambda p: "1+t+2t^2",
}


@pytest.mark.parametrize("name", sorted(FAMILY))
@pytest.mark.parametrize("param", [3, 5])
def test_family_phi(name, param):
    d = build_family(name, param)
    for p in (3, 5, 7):
        want = FAMILY[name](param) if p == param else "4"
        assert str(phi_p(d, p)) == want, (p, name)


def test_gamma1_p7():
    assert str(phi_p(build_family("Gamma1", 7), 7)) == "3+t"


@pytest.mark.parametrize("q", [1, 2, 3])
def test_gamma4_phi(q):
    assert str(phi_p(gamma4(q), 3)) == f"3+t^{2 * q}"


def test_every_fixture_validates():
    for name, (_, default) in CATALOG.items():
        obj = build_fixture(name)
        if isinstance(obj, SpineDiagram):
            assert validate(obj) == [], name


def test_worked_examples():
    K = kinoshita_presentation()
    assert deficiency(K) == 2
    h = cochran_orr_pattern()
    assert h.w0.is_identity()
    assert h.w1 == parse_word("t1 t2 t1^-1 t2^-1 t1") and h.w2 == parse_word("t2")


@pytest.mark.parametrize("call", [
    lambda: tangle_E(2), lambda: tangle_O(0), lambda: tangle_Obar(-1),
    lambda: build_family("Gamma1", 9), lambda: build_family("Gamma2", 2),
    lambda: build_family("Gamma3", 4), lambda: gamma4(0), lambda: build_family("Gamma5", 3),
    lambda: build_tangle("Z"), lambda: build_fixture("nope"), lambda: build_fixture("Lambert", 1),
])
def test_invalid_parameters_raise(call):
    with pytest.raises(ValueError):
        call()


def test_build_tangle_dispatch():
    assert build_tangle("B") == tangle_B()
    assert build_tangle("E", 3) == tangle_E(3)
