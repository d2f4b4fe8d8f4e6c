import pytest
from hypothesis import given, strategies as st

from handleknot.diagram import Crossing, SpineDiagram, delete_isthmus, parse_diagram
from handleknot.fixtures import build_fixture, gamma1, tangle_B, tangle_E, tangle_O
from handleknot.quandle import (Z2_CYCLES, PhiPolynomial, alexander, count_colorings,
                                count_tangle_colorings, dihedral, isomorphic, make_quandle, phi_p,
                                quandle_type, tetrahedral)
from handleknot.quandle import _brute_count, _linear_count

TREFOIL = """kind knot
arc a K1
arc b K1
arc c K1
X over=a under=c>b sign=+
X over=b under=a>c sign=+
X over=c under=b>a sign=+
"""
PLANAR = """kind handcuff
arc k1 K1
arc k2 K2
arc i isthmus
V ends=k1,k1,i isthmus=i
V ends=i,k2,k2 isthmus=i
"""
UNLINK = "kind link\narc a K1\narc b K2\n"

SMALL = [("Gamma1", 3), ("Gamma1", 5), ("Lambert", 3), ("Lambert", 5)]


def test_make_quandle_examples():
    Q = make_quandle("dihedral:5")
    assert Q.size == 5 and Q.op(1, 3) == 0
    T = make_quandle("tetrahedral")
    assert T.size == 4
    A = make_quandle("alexander:2:t^2+t+1:t")
    assert isomorphic(A, T)
    assert isomorphic(dihedral(3), alexander(3, [1, 1]))  # t = -1 gives a*b = 2b - a
    assert not isomorphic(dihedral(3), make_quandle([[0, 0, 0], [1, 1, 1], [2, 2, 2]]))
    with pytest.raises(ValueError, match="Q1"):
        make_quandle([[1, 0], [0, 1]])
    with pytest.raises(ValueError):
        make_quandle("alexander:4:2t+2")
    with pytest.raises(ValueError):
        dihedral(1)


def test_quandle_type_examples():
    assert quandle_type(dihedral(7)) == 2
    assert quandle_type(tetrahedral()) == 3
    assert quandle_type(make_quandle([[0, 0], [1, 1]])) == 2


def test_count_examples():
    p = 5
    for name, param in SMALL:
        assert count_colorings(build_fixture(name, param), dihedral(p), (0, 0)) == p
    unlink = parse_diagram(UNLINK)
    assert count_colorings(unlink, dihedral(p), (0, 0)) == p * p
    trefoil = parse_diagram(TREFOIL)
    assert count_colorings(trefoil, dihedral(3), (1, 0)) == 9
    assert count_colorings(trefoil, dihedral(3), (1, 0), method="brute") == 9
    with pytest.raises(ValueError):
        count_colorings(trefoil, tetrahedral(), (1, 0))


def test_tangle_count_examples():
    Q = dihedral(3)
    assert count_tangle_colorings(tangle_E(3), Q, (1, 1), [0, 1, 0, 1]) == 1
    assert count_tangle_colorings(tangle_E(5), Q, (1, 1), [0, 1, 0, 1]) == 0
    assert count_tangle_colorings(tangle_B(), Q, (1, 1), [0, 1, 0, 1]) == 9
    with pytest.raises(ValueError):
        count_tangle_colorings(tangle_E(3), Q, (1, 1), [0, 1])


def test_phi_examples():
    assert str(phi_p(gamma1(3), 3)) == "3+t"
    assert str(phi_p(gamma1(5), 3)) == "4"
    assert str(phi_p(parse_diagram(PLANAR), 7)) == "4"
    with pytest.raises(ValueError):
        phi_p(gamma1(3), 9)


@pytest.mark.parametrize("text", ["4", "3+t", "1+t+2t^2", "1+2t^2+t^4", "4t"])
def test_phi_text_roundtrip(text):
    assert str(PhiPolynomial.parse(text)) == text
    assert sum(PhiPolynomial.parse(text).coefficients().values()) == 4


def test_phi_rejects_bad_shapes():
    with pytest.raises(ValueError):
        PhiPolynomial((0, 1, 2))
    with pytest.raises(ValueError):
        PhiPolynomial.parse("3+t^-1")


@pytest.mark.parametrize("name,param", SMALL)
@pytest.mark.parametrize("p", [3, 5])
def test_brute_force_matches_linear_algebra(name, param, p):
    d = build_fixture(name, param)
    assert len(d.arcs) <= 12
    for z in Z2_CYCLES:
        assert _brute_count(d, dihedral(p), z) == _linear_count(d, p, z)


@pytest.mark.parametrize("tangle", [tangle_E(3), tangle_O(3)], ids=["E3", "O3"])
def test_brute_force_matches_linear_algebra_on_tangles(tangle):
    p = 3
    for z in Z2_CYCLES:
        for a in range(p):
            for b in range(p):
                bd = [a, b, a, b]
                assert count_tangle_colorings(tangle, dihedral(p), z, bd, method="brute") == \
                    count_tangle_colorings(tangle, dihedral(p), z, bd)


def test_brute_limit_is_enforced(monkeypatch):
    monkeypatch.setenv("HANDLEKNOT_BRUTE_LIMIT", "4")
    with pytest.raises(ValueError, match="limited"):
        count_colorings(gamma1(3), dihedral(3), (0, 0), method="brute")


@pytest.mark.parametrize("name,param", SMALL + [("Gamma2", 3), ("Gamma3", 3), ("Gamma4", 1)])
def test_counts_are_powers_of_p(name, param):
    d = build_fixture(name, param)
    for p in (3, 5, 7):
        for z in Z2_CYCLES:
            n = count_colorings(d, dihedral(p), z)
            assert n >= p
            while n % p == 0:
                n //= p
            assert n == 1
        assert sum(phi_p(d, p).coefficients().values()) == 4
    assert sum(phi_p(delete_isthmus(d), 3).coefficients().values()) == 4


def _r2(d: SpineDiagram, under: str, over: str) -> SpineDiagram:
    """Push `under` twice beneath `over` with opposite crossings."""
    k = next(i for i, c in enumerate(d.crossings) if c.under_in == under)
    comp = d.component(under)
    u1, u2 = under + "_r1", under + "_r2"
    old = d.crossings[k]
    cr = list(d.crossings)
    cr[k] = Crossing(old.over, u2, old.under_out, old.sign)
    cr += [Crossing(over, under, u1, 1), Crossing(over, u1, u2, -1)]
    return SpineDiagram(d.kind, d.arcs + ((u1, comp), (u2, comp)), tuple(cr), d.vertices)


@pytest.mark.parametrize("name,param,under,over", [
    ("Lambert", 3, "c1", "d2"), ("Lambert", 5, "a2", "c1"), ("Gamma1", 3, "a1", "a2")])
def test_reidemeister_two_invariance(name, param, under, over):
    d = build_fixture(name, param)
    if name == "Gamma1":
        under = next(c.under_in for c in d.crossings)
        over = next(a for a in d.names if a != under)
    e = _r2(d, under, over)
    for p in (3, 5):
        assert phi_p(e, p) == phi_p(d, p)


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_dihedral_is_involutory(a, b, c):
    Q = dihedral(3)
    assert Q.op(Q.op(a, b), b) == a
    assert Q.op(Q.op(a, b), c) == Q.op(Q.op(a, c), Q.op(b, c))
