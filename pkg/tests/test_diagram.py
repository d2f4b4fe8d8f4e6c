import pytest

from handleknot.diagram import (CycleAssignment, Crossing, DiagramError, SpineDiagram, delete_isthmus,
                                enumerate_cycles, format_diagram, parse_diagram, validate, wirtinger)
from handleknot.fixtures import build_family, gamma1, kinoshita_presentation, lambert_diagram
from handleknot.ideals import alexander_report, elementary_ideal, ideals_equal, LambdaMatrix, simplify_matrix
from handleknot.presentation import alexander_matrix, deficiency
from handleknot.quandle import Z2_CYCLES, count_colorings, dihedral, phi_p

UNKNOT = "kind knot\narc a K1\n"
PLANAR = """kind handcuff
arc k1 K1
arc k2 K2
arc i isthmus
V ends=k1,k1,i isthmus=i
V ends=i,k2,k2 isthmus=i
"""
DOUBLE_USE = """kind knot
arc a K1
arc b K1
X over=a under=a>b sign=+
X over=b under=a>b sign=+
"""
TREFOIL = """kind knot
arc a K1
arc b K1
arc c K1
X over=a under=c>b sign=+
X over=b under=a>c sign=+
X over=c under=b>a sign=+
"""

HANDCUFFS = [("Gamma1", 3), ("Gamma1", 5), ("Gamma2", 3), ("Gamma3", 3), ("Gamma4", 1)]


def test_parse_examples():
    assert validate(parse_diagram(UNKNOT)) == []
    d = parse_diagram(PLANAR)
    assert d.kind == "handcuff" and len(d.arcs) == 3 and not d.crossings
    with pytest.raises(DiagramError, match="arc-end multiply consumed"):
        parse_diagram(DOUBLE_USE)
    assert any("multiply consumed" in v for v in validate(parse_diagram(DOUBLE_USE, validate_result=False)))


def test_parse_errors_carry_line_numbers():
    with pytest.raises(DiagramError, match="line 2"):
        parse_diagram("kind knot\nX over=a sign=+\n")
    with pytest.raises(DiagramError, match="kind"):
        parse_diagram("arc a K1\n")


def test_format_roundtrip():
    for d in (parse_diagram(PLANAR), parse_diagram(TREFOIL), gamma1(3), lambert_diagram(5)):
        assert parse_diagram(format_diagram(d, comment="x")) == d


def test_wirtinger_examples():
    P = wirtinger(parse_diagram(UNKNOT))
    assert P.n == 1 and P.relators == ()
    L = wirtinger(lambert_diagram(3))
    assert L.n == 7 and deficiency(L) == 2
    with pytest.raises(DiagramError):
        wirtinger(SpineDiagram("tangle", (("a", "K1"),), boundary=("a", "a")))


def _e2(P):
    return elementary_ideal(simplify_matrix(LambdaMatrix.of(alexander_matrix(P), P.n)), 2)


def test_any_relator_may_be_dropped():
    # rotating the crossing list changes which relator is discarded
    d = lambert_diagram(3)
    base = _e2(wirtinger(d))
    for k in range(1, len(d.crossings)):
        cr = d.crossings[k:] + d.crossings[:k]
        rot = SpineDiagram(d.kind, d.arcs, cr, d.vertices)
        assert ideals_equal(_e2(wirtinger(rot)), base) is True


def test_lambert_and_kinoshita_reports():
    r = alexander_report(wirtinger(lambert_diagram(3)))
    assert r.principal.verdict == "Yes"
    assert alexander_report(kinoshita_presentation()).principal.verdict == "No"


@pytest.mark.parametrize("name,param", HANDCUFFS + [("Lambert", 3), ("Lambert", 5)])
def test_handcuff_deficiency_is_two(name, param):
    from handleknot.fixtures import build_fixture
    assert deficiency(wirtinger(build_fixture(name, param))) == 2


def test_enumerate_cycles():
    d = gamma1(3)
    for k in (2, 3, 5):
        cyc = enumerate_cycles(d, k)
        assert len(cyc) == k * k
        assert len(set(cyc)) == k * k
        assert all(c.value("isthmus") == 0 for c in cyc)
    link = delete_isthmus(d)
    assert len(enumerate_cycles(link, 2)) == 4
    with pytest.raises(DiagramError):
        enumerate_cycles(parse_diagram(UNKNOT), 2)
    assert CycleAssignment(3, 4, 2).value("K1") == 1


def test_delete_isthmus_examples():
    link = delete_isthmus(parse_diagram(PLANAR))
    assert link.kind == "link" and len(link.arcs) == 2 and not link.crossings
    assert str(phi_p(delete_isthmus(gamma1(3)), 3)) == "4t"
    with pytest.raises(DiagramError):
        delete_isthmus(link)


@pytest.mark.parametrize("name,param", HANDCUFFS)
def test_delete_isthmus_arc_count(name, param):
    # a closed component has one arc per under-crossing, or a single arc if it has none
    d = build_family(name, param)
    link = delete_isthmus(d)
    assert validate(link) == []
    isth = set(d.isthmus_arcs())
    for comp in ("K1", "K2"):
        unders = sum(1 for c in d.crossings if d.component(c.under_in) == comp and c.over not in isth)
        assert sum(1 for _, k in link.arcs if k == comp) == max(1, unders)


@pytest.mark.parametrize("name,param", HANDCUFFS)
def test_isthmus_adds_at_most_one_equation(name, param):
    # the handcuff system is the link system plus one equation, cycle by cycle
    d = build_family(name, param)
    link = delete_isthmus(d)
    for p in (3, 5):
        Q = dihedral(p)
        for z in Z2_CYCLES:
            n, m = count_colorings(d, Q, z), count_colorings(link, Q, z)
            assert n in (m, m // p), (z, n, m)


@pytest.mark.parametrize("name,param", HANDCUFFS + [("Gamma4", 2)])
@pytest.mark.parametrize("p", [3, 5])
def test_link_exponents_bound_spine_exponents(name, param, p):
    d = build_family(name, param)
    h = phi_p(d, p).exponents
    m = phi_p(delete_isthmus(d), p).exponents
    assert m[0] == 1 and h[0] == 0
    assert all(hj in (mj, mj - 1) for hj, mj in zip(h[1:], m[1:]))


def test_crossing_changing_component_is_rejected():
    d = SpineDiagram("link", (("a", "K1"), ("b", "K2")), (Crossing("a", "b", "a", 1),))
    assert any("changes component" in v for v in validate(d))
