"""Worked examples: the tangles E, O, Obar, B, the spines Gamma_1..Gamma_4,
the Lambert diagrams, the Kinoshita presentation and the Cochran-Orr pattern.

Diagrams are generated from Morse event lists (see ``morse``), so each one
is planar by construction.  The layouts are chosen so that the coloring
counts of the tangles come out as stated in the tangle lemmas; those counts,
not pictures, pin the crossings down.

Boundary order of the tangles (bottom ends left to right, then top ends):

* E(q): K1 bottom, K2 bottom, K1 top, K2 top.  The two strands meet at a
  split and a merge joined by q half twists.
* O(q): a, b, a', b' with a, a' on K1 (entering at the bottom left) and b, b'
  on K2.
* Obar(q): the band double of O(q).  Bottom: left and right arcs of the band
  through a, then of the band through b; top likewise for a', b'.  K1 runs
  along the right-hand arcs of the bands.  The coloring described in the
  tangle lemma is ``obar_boundary(a, b, c, d)``.
* B: a, c, b, d: the bottom ends of T and of B, then the top ends.
"""

from __future__ import annotations

from .diagram import Crossing, SpineDiagram, Vertex, check
from .freegroup import parse_word
from .groebner import is_prime
from .morse import X, build, cap, cup, double, merge, split, start, stop
from .patterns import HandlebodyPattern
from .presentation import GroupPresentation


def _odd(q: int, what: str = "q") -> None:
    if not isinstance(q, int) or q < 1 or q % 2 == 0:
        raise ValueError(f"{what} must be a positive odd integer, got {q!r}")


def _odd_prime(p: int) -> None:
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise ValueError(f"parameter must be an odd prime, got {p!r}")


# event lists

def e_events(q: int, at: int = 0) -> list:
    """Split, q half twists of the two new strands, merge."""
    ev = [split(at, "R"), X(at + 1, "R")]
    for _ in range((q - 1) // 2):
        ev += [X(at + 1, "R"), X(at, "R"), X(at, "R"), X(at + 1, "R")]
    ev.append(merge(at + 1, "R"))
    return ev


def o_events(q: int, at: int = 0) -> list:
    """Two strands, one of them winding (q+1)/2 times through a clasp."""
    k = (q + 1) // 2

    def x(i):
        return X(at + i, "R")

    ev = [cup(at + 1), x(0)]
    if k >= 2:
        ev += [x(2), x(1)]
    for i in range(1, k):
        ev += [x(1), x(2), x(0), x(1), x(1), x(0)]
        if i + 1 <= k - 1:
            ev += [x(2), x(1)]
    ev += [x(2), cap(at + 1)]
    return ev


def kink(i: int, over: str) -> list:
    """A curl on the strand at slot i; over='L' adds writhe +1."""
    return [cup(i + 1), X(i, over), cap(i + 1)]


def b_core(at: int = 0) -> list:
    """Cores of one tile of the interleaved band surfaces bounded by T and B."""
    s = at
    return [split(s), split(s + 2), X(s + 1, "R"), X(s + 1, "R"),
            split(s), split(s + 4), X(s + 1, "R"), merge(s),
            X(s + 2, "R"), merge(s + 3), X(s + 1, "R"), X(s + 1, "R"), merge(s), merge(s + 1)]


# tangles

def tangle_E(q: int) -> SpineDiagram:
    _odd(q)
    return build(e_events(q), 2, "tangle", {("B", 0): "K1", ("B", 1): "K2"})


def tangle_O(q: int) -> SpineDiagram:
    _odd(q)
    return build(o_events(q), 2, "tangle", {("B", 0): "K1", ("T", 0): "K2"})


def tangle_Obar(q: int) -> SpineDiagram:
    _odd(q)
    labels = {("B", 1): "K1", ("B", 0): "K2", ("T", 0): "K1", ("T", 1): "K2"}
    return build(double(o_events(q)), 4, "tangle", labels)


def obar_boundary(a: int, b: int, c: int, d: int) -> list[int]:
    """Boundary colors of Obar(q) for the coloring (a, b, c, d) of the tangle lemma.

    The bands are labelled (b, -delta), (c, -delta) on the left and
    (a, delta), (d, delta) on the right, with delta = b - a = c - d; each
    band end carries the two colors a, b resp. c, d on its two arcs.
    """
    return [a, b, c, d, b, a, d, c]


def tangle_B() -> SpineDiagram:
    labels = {("B", 1): "K1", ("B", 2): "K2"}
    return build(double(b_core()), 4, "tangle", labels, drop=[("B", 0), ("B", 3)])


def build_tangle(name: str, q: int = 1) -> SpineDiagram:
    builders = {"E": tangle_E, "O": tangle_O, "Obar": tangle_Obar}
    if name == "B":
        return tangle_B()
    if name not in builders:
        raise ValueError(f"unknown tangle {name!r}")
    return builders[name](q)


# spines

def gamma1(p: int) -> SpineDiagram:
    """Closure of E(p): the two strands of the box are capped off into two circles."""
    _odd_prime(p)
    ev = [cup(0), cup(2)] + e_events(p, 1) + [cap(0), cap(0)]
    return build(ev, 0, "handcuff")


def gamma2(p: int) -> SpineDiagram:
    """Two closed-up copies of O(p) joined by a straight isthmus."""
    _odd_prime(p)
    ev = [cup(0), cup(2), cup(4), cup(6), split(3, "R"), merge(4, "L")]
    ev += o_events(p, 1) + o_events(p, 5) + [cap(4), cap(4), cap(0), cap(0)]
    return build(ev, 0, "handcuff")


def gamma3(p: int, box: int | None = None) -> SpineDiagram:
    """A band of zero framing around the closure of O(p), with E(box) inserted.

    The two edges of the band are the constituent knots; two curls cancel
    the blackboard framing so that the link is a boundary link.
    """
    _odd_prime(p)
    box = p if box is None else box
    _odd(box, "box")
    core1 = [cup(0), cup(2)]
    core2 = kink(0, "L") + kink(0, "L") + o_events(p, 1) + [cap(0), cap(0)]
    return build(double(core1) + e_events(box, 0) + double(core2), 0, "handcuff")


def gamma4(q: int) -> SpineDiagram:
    """Boundaries of two band surfaces linked through q tiles, with a short isthmus."""
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"q must be a positive integer, got {q!r}")
    ev = double([start(0), start(1)]) + [split(1, "R"), merge(2, "L")]
    for _ in range(q):
        ev += double(b_core())
    ev += double([stop(1), stop(0)])
    return build(ev, 0, "handcuff")


def build_family(name: str, param: int) -> SpineDiagram:
    builders = {"Gamma1": gamma1, "Gamma2": gamma2, "Gamma3": gamma3, "Gamma4": gamma4}
    if name not in builders:
        raise ValueError(f"unknown family {name!r}")
    return builders[name](param)


def lambert_diagram(p: int) -> SpineDiagram:
    """Gamma_1(p) labelled with isthmus arcs a_i, b_j and knot arcs c_i, d_i, r = (p+1)/2."""
    _odd_prime(p)
    r = (p + 1) // 2
    arcs = [(f"a{i}", "isthmus") for i in range(1, r + 1)]
    arcs += [(f"b{i}", "isthmus") for i in range(1, r)]
    arcs += [(f"c{i}", "K1") for i in range(1, r + 1)]
    arcs += [(f"d{i}", "K2") for i in range(1, r + 1)]
    xs = []
    for i in range(1, r):
        xs.append(Crossing(f"c{i}", f"b{i}", f"a{i}", 1))
        xs.append(Crossing(f"b{i}", f"c{i}", f"c{i + 1}", 1))
        xs.append(Crossing(f"b{i}", f"d{i + 1}", f"d{i}", -1))
        xs.append(Crossing(f"d{i + 1}", f"a{i + 1}", f"b{i}", -1))
    vs = [Vertex(("c1", f"c{r}", f"a{r}"), f"a{r}"), Vertex((f"d{r}", "d1", "a1"), "a1")]
    return check(SpineDiagram("handcuff", tuple(arcs), tuple(xs), tuple(vs)))


def kinoshita_presentation() -> GroupPresentation:
    """Complement group of the handlebody of the Kinoshita theta curve."""
    rel = parse_word("x1 x2 x1^-1 x3 x1 x3^-1 x2 x3 x2^-1", rank=3, prefix="x")
    return GroupPresentation(3, (rel,))


def cochran_orr_pattern() -> HandlebodyPattern:
    return HandlebodyPattern.of(None, parse_word("t1 t2 t1^-1 t2^-1 t1"), parse_word("t2"))


# name -> (builder, default parameter or None)
CATALOG = {
    "E": (tangle_E, 3),
    "O": (tangle_O, 3),
    "Obar": (tangle_Obar, 3),
    "B": (lambda _=None: tangle_B(), None),
    "Gamma1": (gamma1, 3),
    "Gamma2": (gamma2, 3),
    "Gamma3": (gamma3, 3),
    "Gamma4": (gamma4, 1),
    "Lambert": (lambert_diagram, 3),
    "Kinoshita": (lambda _=None: kinoshita_presentation(), None),
    "CochranOrr": (lambda _=None: cochran_orr_pattern(), None),
}


def build_fixture(name: str, param: int | None = None):
    if name not in CATALOG:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(CATALOG)}")
    fn, default = CATALOG[name]
    return fn(default if param is None else param)
