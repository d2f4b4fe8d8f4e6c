"""Diagrams of handcuff spines, links, knots and tangles.

A diagram is a list of arcs (maximal over-passing strands), crossings and
trivalent vertices.  Every arc has two ends, its start and its end, in the
direction of its orientation.  A crossing ``under=x>y`` ends x and starts y.
A vertex uses whichever end of a listed arc is still free; when both are
free the first use takes the start.  An arc that no crossing or vertex
touches is a closed loop.

Conventions: a crossing is positive when the under-strand passes from the
right of the over-strand to its left, and the ends of a vertex are listed
clockwise in the diagram plane.  With these the Wirtinger relators below
are consistent: for a planar diagram any one of them follows from the rest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .freegroup import FreeWord
from .presentation import GroupPresentation

KINDS = ("handcuff", "link", "knot", "tangle")
COMPONENTS = ("K1", "K2", "isthmus")


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    over: str
    under_in: str
    under_out: str
    sign: int  # +1 or -1


@dataclass(frozen=True)
class Vertex:
    ends: tuple[str, str, str]
    isthmus: str


@dataclass(frozen=True)
class SpineDiagram:
    kind: str
    arcs: tuple[tuple[str, str], ...]  # (name, component)
    crossings: tuple[Crossing, ...] = ()
    vertices: tuple[Vertex, ...] = ()
    boundary: tuple[str, ...] = ()
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {name: i for i, (name, _) in enumerate(self.arcs)})

    @property
    def names(self) -> list[str]:
        return [a for a, _ in self.arcs]

    def component(self, arc: str) -> str:
        return self.arcs[self._index[arc]][1]

    def index(self, arc: str) -> int:
        return self._index[arc]

    def isthmus_arcs(self) -> list[str]:
        return [a for a, c in self.arcs if c == "isthmus"]


@dataclass(frozen=True)
class CycleAssignment:
    k: int
    z1: int
    z2: int

    def value(self, component: str) -> int:
        if component == "K1":
            return self.z1 % self.k
        if component == "K2":
            return self.z2 % self.k
        return 0


def _end_usage(d: SpineDiagram):
    """Assign arc ends to crossings, vertices and boundary slots.

    Returns (start_use, end_use, vertex_slots, violations) where
    vertex_slots[v] lists +1 (start) or -1 (end) for each listed end.
    """
    start: dict[str, list] = {a: [] for a in d.names}
    end: dict[str, list] = {a: [] for a in d.names}
    problems = []
    for i, c in enumerate(d.crossings):
        for a in (c.over, c.under_in, c.under_out):
            if a not in start:
                problems.append(f"crossing {i + 1}: unknown arc {a!r}")
        if c.under_in in end:
            end[c.under_in].append(("X", i))
        if c.under_out in start:
            start[c.under_out].append(("X", i))
    slots = []
    for vi, v in enumerate(d.vertices):
        vs = []
        for a in v.ends:
            if a not in start:
                problems.append(f"vertex {vi + 1}: unknown arc {a!r}")
                vs.append(0)
                continue
            if not start[a]:
                start[a].append(("V", vi))
                vs.append(+1)
            elif not end[a]:
                end[a].append(("V", vi))
                vs.append(-1)
            else:
                start[a].append(("V", vi))
                vs.append(+1)
        slots.append(vs)
    for a in d.boundary:
        if a not in start:
            problems.append(f"boundary: unknown arc {a!r}")
        elif not start[a]:
            start[a].append(("B", 0))
        else:
            end[a].append(("B", 0))
    return start, end, slots, problems


def vertex_slots(d: SpineDiagram) -> list[list[int]]:
    return _end_usage(d)[2]


def validate(d: SpineDiagram) -> list[str]:
    problems = []
    if d.kind not in KINDS:
        problems.append(f"unknown kind {d.kind!r}")
    names = d.names
    if len(set(names)) != len(names):
        problems.append("duplicate arc names")
    for a, comp in d.arcs:
        if comp not in COMPONENTS:
            problems.append(f"arc {a!r}: unknown component {comp!r}")
    start, end, _, more = _end_usage(d)
    problems += more
    for a in names:
        if len(start[a]) > 1 or len(end[a]) > 1:
            problems.append(f"arc {a!r}: arc-end multiply consumed")
        elif bool(start[a]) != bool(end[a]):
            problems.append(f"arc {a!r}: dangling arc-end")
    for i, c in enumerate(d.crossings):
        if c.sign not in (1, -1):
            problems.append(f"crossing {i + 1}: sign must be + or -")
        if c.under_in in start and c.under_out in start and \
                d.component(c.under_in) != d.component(c.under_out):
            problems.append(f"crossing {i + 1}: under-strand changes component")
    isthmus = d.isthmus_arcs()
    if d.kind == "handcuff":
        if len(d.vertices) != 2:
            problems.append("handcuff diagram needs exactly 2 vertices")
        if not isthmus:
            problems.append("handcuff diagram needs an isthmus")
        for vi, v in enumerate(d.vertices):
            if v.isthmus not in v.ends:
                problems.append(f"vertex {vi + 1}: isthmus end not among its ends")
                continue
            if v.isthmus in start and d.component(v.isthmus) != "isthmus":
                problems.append(f"vertex {vi + 1}: designated isthmus arc is not an isthmus arc")
            rest = [a for a in v.ends if a != v.isthmus] if v.ends.count(v.isthmus) == 1 else []
            comps = {d.component(a) for a in rest if a in start}
            if len(comps) != 1 or comps & {"isthmus"}:
                problems.append(f"vertex {vi + 1}: knot ends must lie on one constituent")
        if len(d.vertices) == 2 and not problems:
            knots = {d.component(a) for v in d.vertices for a in v.ends if a != v.isthmus}
            if knots != {"K1", "K2"}:
                problems.append("the two vertices must lie on different constituents")
    elif d.kind in ("link", "knot"):
        if d.vertices:
            problems.append(f"{d.kind} diagram cannot have vertices")
        if isthmus:
            problems.append(f"{d.kind} diagram cannot have isthmus arcs")
    if d.kind != "tangle" and d.boundary:
        problems.append("only tangles have boundary ends")
    return problems


def check(d: SpineDiagram) -> SpineDiagram:
    problems = validate(d)
    if problems:
        raise DiagramError("; ".join(problems))
    return d


def wirtinger(d: SpineDiagram) -> GroupPresentation:
    """Wirtinger presentation: one generator per arc.

    Crossing relators read o x o^-1 y^-1 for a positive crossing and
    o y o^-1 x^-1 for a negative one (x, y the incoming and outgoing under
    arcs, o the over arc).  A vertex contributes the product of its ends in
    stored order, outgoing ends with exponent +1 and incoming with -1.
    One relator is redundant and dropped: the last crossing relator, or the
    last vertex relator when there are no crossings.
    """
    if d.kind == "tangle":
        raise DiagramError("Wirtinger presentations are only built for closed diagrams")
    n = len(d.arcs)
    g = {a: i + 1 for i, a in enumerate(d.names)}
    crossing_rels = []
    for c in d.crossings:
        o, x, y = g[c.over], g[c.under_in], g[c.under_out]
        if c.sign > 0:
            crossing_rels.append(FreeWord(n, (o, x, -o, -y)))
        else:
            crossing_rels.append(FreeWord(n, (o, y, -o, -x)))
    vertex_rels = []
    for v, slots in zip(d.vertices, vertex_slots(d)):
        vertex_rels.append(FreeWord(n, tuple(g[a] * s for a, s in zip(v.ends, slots))))
    if crossing_rels:
        crossing_rels.pop()
    elif vertex_rels:
        vertex_rels.pop()
    rels = [r for r in crossing_rels + vertex_rels if not r.is_identity()]
    return GroupPresentation(n, tuple(rels), tuple(d.names))


def enumerate_cycles(d: SpineDiagram, k: int) -> list[CycleAssignment]:
    if d.kind not in ("handcuff", "link"):
        raise DiagramError("cycles are enumerated for handcuff and link diagrams")
    if k < 2:
        raise ValueError("modulus must be at least 2")
    return [CycleAssignment(k, z1, z2) for z1 in range(k) for z2 in range(k)]


class _Merge:
    def __init__(self, names):
        self.parent = {a: a for a in names}

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def delete_isthmus(d: SpineDiagram) -> SpineDiagram:
    """The constituent link: drop the isthmus and merge arcs across vertices."""
    if d.kind != "handcuff":
        raise DiagramError("isthmus deletion needs a handcuff diagram")
    check(d)
    isth = set(d.isthmus_arcs())
    keep = [a for a in d.names if a not in isth]
    m = _Merge(keep)
    crossings = []
    for c in d.crossings:
        if c.under_in in isth:
            continue
        if c.over in isth:
            m.union(c.under_in, c.under_out)
            continue
        crossings.append(c)
    for v in d.vertices:
        knots = [a for a in v.ends if a != v.isthmus]
        if len(knots) != 2:
            raise DiagramError("malformed vertex")
        m.union(knots[0], knots[1])
    # keep the first name in each class, in original order
    rep = {}
    for a in keep:
        rep.setdefault(m.find(a), a)
    name = {a: rep[m.find(a)] for a in keep}
    arcs = tuple((a, d.component(a)) for a in keep if name[a] == a)
    new_cr = tuple(Crossing(name[c.over], name[c.under_in], name[c.under_out], c.sign)
                   for c in crossings)
    return check(SpineDiagram("link", arcs, new_cr))


# Text format.

_X = re.compile(r"^X\s+over=(\S+)\s+under=(\S+)>(\S+)\s+sign=([+-])$")
_V = re.compile(r"^V\s+ends=(\S+)\s+isthmus=(\S+)$")


def parse_diagram(text: str, validate_result: bool = True) -> SpineDiagram:
    kind = None
    arcs, crossings, vertices, boundary = [], [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head = line.split()[0]
        try:
            if head == "kind":
                kind = line.split()[1].lower()
                if kind not in KINDS:
                    raise ValueError(f"unknown kind {kind!r}")
            elif head == "arc":
                parts = line.split()
                if len(parts) != 3:
                    raise ValueError("expected 'arc NAME COMPONENT'")
                comp = {"k1": "K1", "k2": "K2", "isthmus": "isthmus"}.get(parts[2].lower())
                if comp is None:
                    raise ValueError(f"unknown component {parts[2]!r}")
                arcs.append((parts[1], comp))
            elif head == "X":
                mx = _X.match(line)
                if not mx:
                    raise ValueError("expected 'X over=o under=x>y sign=+|-'")
                crossings.append(Crossing(mx.group(1), mx.group(2), mx.group(3),
                                          1 if mx.group(4) == "+" else -1))
            elif head == "V":
                mv = _V.match(line)
                ends = tuple(mv.group(1).split(",")) if mv else ()
                if not mv or len(ends) != 3:
                    raise ValueError("expected 'V ends=a,b,c isthmus=c'")
                vertices.append(Vertex(ends, mv.group(2)))
            elif head == "boundary":
                boundary.extend(x for x in line[len("boundary"):].replace(" ", "").split(",") if x)
            else:
                raise ValueError(f"unknown directive {head!r}")
        except ValueError as exc:
            raise DiagramError(f"line {lineno}, column 1: {exc}") from None
    if kind is None:
        raise DiagramError("missing 'kind' line")
    d = SpineDiagram(kind, tuple(arcs), tuple(crossings), tuple(vertices), tuple(boundary))
    return check(d) if validate_result else d


def format_diagram(d: SpineDiagram, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"kind {d.kind}")
    lines += [f"arc {a} {c}" for a, c in d.arcs]
    lines += [f"X over={c.over} under={c.under_in}>{c.under_out} sign={'+' if c.sign > 0 else '-'}"
              for c in d.crossings]
    lines += [f"V ends={','.join(v.ends)} isthmus={v.isthmus}" for v in d.vertices]
    if d.boundary:
        lines.append("boundary " + ",".join(d.boundary))
    return "\n".join(lines) + "\n"
