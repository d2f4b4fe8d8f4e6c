"""Diagrams from a bottom-to-top sequence of elementary events.

Strands run upward through numbered slots.  Events act on adjacent slots:
a crossing swaps two strands, a cup creates two, a cap joins two, a split
turns one strand into two at a trivalent vertex and a merge does the
reverse.  The builder traces the resulting curves, orients them and reads
off arcs, crossing signs and vertex orders, so every diagram produced here
is planar and its Wirtinger presentation is that of an actual embedding.

Band (blackboard) doubling acts on event lists: see ``double``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Crossing, SpineDiagram, Vertex, check


@dataclass(frozen=True)
class Event:
    op: str  # X, cup, cap, split, merge; start, stop only before doubling
    i: int
    side: str = ""  # X: which strand is over ("L" or "R"); split/merge: isthmus side


def X(i: int, over: str) -> Event:
    if over not in ("L", "R"):
        raise ValueError("over must be 'L' or 'R'")
    return Event("X", i, over)


def cup(i: int) -> Event:
    return Event("cup", i)


def cap(i: int) -> Event:
    return Event("cap", i)


def split(i: int, isthmus: str = "R") -> Event:
    return Event("split", i, isthmus)


def merge(i: int, isthmus: str = "R") -> Event:
    return Event("merge", i, isthmus)


def start(i: int) -> Event:
    return Event("start", i)


def stop(i: int) -> Event:
    return Event("stop", i)


def shifted(events, k: int) -> list[Event]:
    return [Event(e.op, e.i + k, e.side) for e in events]


def double(events) -> list[Event]:
    """Replace every strand by a parallel pair (the boundary of a flat band).

    Input events may use start/stop (an end of a band core) and split/merge
    (a band forking); they become cups and caps.  Crossings become four.
    """
    out = []
    for e in events:
        j = 2 * e.i
        if e.op == "X":
            out += [X(j + 1, e.side), X(j, e.side), X(j + 2, e.side), X(j + 1, e.side)]
        elif e.op == "cup":
            out += [cup(j), cup(j + 1)]
        elif e.op == "cap":
            out += [cap(j + 1), cap(j)]
        elif e.op in ("split", "start"):
            out.append(cup(j + 1 if e.op == "split" else j))
        elif e.op in ("merge", "stop"):
            out.append(cap(j + 1 if e.op == "merge" else j))
        else:
            raise ValueError(f"unknown event {e.op!r}")
    return out


_PREFIX = {"K1": "a", "K2": "b", "isthmus": "i"}


class _Sheet:
    def __init__(self, width: int):
        self.n = 0
        self.link: dict = {}  # (piece, end) -> ((piece, end), kind, crossing)
        self.term: dict = {}  # (piece, end) -> ("B"|"T", slot) or ("V", vertex)
        self.crossings: list = []  # [over (lo, hi, dx), under (lo, hi, dx)]
        self.vertices: list = []  # (ends clockwise, isthmus end)
        self.slots = [self._new() for _ in range(width)]
        for s, p in enumerate(self.slots):
            self.term[(p, 0)] = ("B", s)

    def _new(self) -> int:
        self.n += 1
        return self.n - 1

    def _join(self, a, b, kind, c=None):
        self.link[a] = (b, kind, c)
        self.link[b] = (a, kind, c)

    def run(self, e: Event):
        s = self.slots
        i = e.i
        if e.op == "X":
            if not 0 <= i < len(s) - 1:
                raise ValueError(f"crossing at slot {i} out of range")
            left, right = s[i], s[i + 1]
            nl, nr = self._new(), self._new()
            c = len(self.crossings)
            up = (left, nr, +1)  # the left strand moves right
            down = (right, nl, -1)
            over, under = (up, down) if e.side == "L" else (down, up)
            self.crossings.append((over, under))
            self._join((left, 1), (nr, 0), "over" if e.side == "L" else "under", c)
            self._join((right, 1), (nl, 0), "under" if e.side == "L" else "over", c)
            s[i], s[i + 1] = nl, nr
        elif e.op == "cup":
            if not 0 <= i <= len(s):
                raise ValueError(f"cup at slot {i} out of range")
            a, b = self._new(), self._new()
            self._join((a, 0), (b, 0), "turn")
            s[i:i] = [a, b]
        elif e.op == "cap":
            if not 0 <= i < len(s) - 1:
                raise ValueError(f"cap at slot {i} out of range")
            self._join((s[i], 1), (s[i + 1], 1), "turn")
            del s[i:i + 2]
        elif e.op == "split":
            if not 0 <= i < len(s):
                raise ValueError(f"split at slot {i} out of range")
            below, l, r = s[i], self._new(), self._new()
            ends = [(below, 1), (l, 0), (r, 0)]  # clockwise
            self._vertex(ends, (l, 0) if e.side == "L" else (r, 0))
            s[i:i + 1] = [l, r]
        elif e.op == "merge":
            if not 0 <= i < len(s) - 1:
                raise ValueError(f"merge at slot {i} out of range")
            l, r, above = s[i], s[i + 1], self._new()
            ends = [(r, 1), (l, 1), (above, 0)]
            self._vertex(ends, (l, 1) if e.side == "L" else (r, 1))
            s[i:i + 2] = [above]
        else:
            raise ValueError(f"event {e.op!r} is only allowed before doubling")

    def _vertex(self, ends, isthmus):
        v = len(self.vertices)
        for end in ends:
            self.term[end] = ("V", v)
        self.vertices.append((ends, isthmus))

    def close(self):
        for s, p in enumerate(self.slots):
            self.term[(p, 1)] = ("T", s)


def build(events, width: int = 0, kind: str = "tangle", labels: dict | None = None,
          drop=()) -> SpineDiagram:
    """Trace the sheet produced by ``events`` into a SpineDiagram.

    ``width`` strands enter at the bottom.  For tangles, ``labels`` maps a
    terminal such as ("B", 0) or ("T", 2) to the component of the strand
    starting there (default K1).  Closed loops are K1, K2, ... in order of
    discovery unless the diagram is a handcuff, where the loop through the
    first vertex is K1.  ``drop`` lists terminals of untouched straight
    strands to be removed from a tangle.
    """
    sh = _Sheet(width)
    for e in events:
        sh.run(e)
    sh.close()
    labels = labels or {}

    # orientation: ordered list of starting ends
    starts = []
    if sh.vertices:
        starts.append(sh.vertices[0][1])
        for ends, isth in sh.vertices:
            starts += [x for x in ends if x != isth]
    bottom = sorted((t[1], end) for end, t in sh.term.items() if t[0] == "B")
    top = sorted((t[1], end) for end, t in sh.term.items() if t[0] == "T")
    starts += [end for _, end in bottom] + [end for _, end in top]

    seen = set()
    paths = []  # (label, [(piece, entered_end)], closed)
    vertex_comp = {}
    for st in starts:
        if st[0] in seen:
            continue
        path = _walk(sh, st, seen)
        t0 = sh.term[st]
        t1 = sh.term[(path[-1][0], 1 - path[-1][1])]
        if t0[0] == "V":
            if st == sh.vertices[t0[1]][1]:
                if t1[0] != "V" or (path[-1][0], 1 - path[-1][1]) != sh.vertices[t1[1]][1]:
                    raise ValueError("isthmus must join the isthmus ends of two vertices")
                label = "isthmus"
            else:
                label = "K1" if t0[1] == 0 else "K2"
                vertex_comp[t0[1]] = label
        else:
            label = labels.get(t0, "K1")
        paths.append((label, path, False, st))
    n_loops = 0
    for p in range(sh.n):
        if p in seen:
            continue
        path = _walk(sh, (p, 0), seen)
        n_loops += 1
        label = labels.get(("L", n_loops - 1), f"K{n_loops}")
        paths.append((label, path, True, (p, 0)))

    # arcs
    arc_of: dict[int, str] = {}
    counters = {"K1": 0, "K2": 0, "isthmus": 0}
    arcs = []
    direction: dict[int, int] = {}  # piece -> +1 travelled upward, -1 downward
    under_passes = {}  # crossing -> (in arc, out arc)
    drop_pieces = set()
    drop_terms = set(drop)

    def new_arc(label):
        counters[label] += 1
        name = f"{_PREFIX[label]}{counters[label]}"
        arcs.append((name, label))
        return name

    for label, path, closed, st in paths:
        if not closed and sh.term[st] in drop_terms:
            if any(sh.link.get((p, 1 - e), (None, "turn"))[1] != "turn"
                   for p, e in path):
                raise ValueError("only untouched strands can be dropped")
            drop_pieces.update(p for p, _ in path)
            continue
        cur = new_arc(label)
        first = cur
        wrapped = False
        for k, (p, e) in enumerate(path):
            arc_of[p] = cur
            direction[p] = 1 if e == 0 else -1
            nxt = sh.link.get((p, 1 - e))
            if nxt is None:
                continue
            _, kind_, c = nxt
            last = k == len(path) - 1
            if kind_ == "under":
                if last and closed:
                    under_passes[c] = (cur, first)
                    wrapped = True
                else:
                    new = new_arc(label)
                    under_passes[c] = (cur, new)
                    cur = new
        if closed and not wrapped and cur != first:
            # the walk wrapped around: the final arc continues the first one
            last_name = cur
            for p, _ in path:
                if arc_of[p] == last_name:
                    arc_of[p] = first
            arcs.remove((last_name, label))
            for c, (a, b) in list(under_passes.items()):
                under_passes[c] = (first if a == last_name else a, first if b == last_name else b)

    # rename arcs densely per component, in order of appearance
    rename = {}
    counters = {"K1": 0, "K2": 0, "isthmus": 0}
    for name, label in arcs:
        counters[label] += 1
        rename[name] = f"{_PREFIX[label]}{counters[label]}"
    arcs = [(rename[a], c) for a, c in arcs]

    crossings = []
    for c, (over, under) in enumerate(sh.crossings):
        o_lo, _, o_dx = over
        u_lo, _, u_dx = under
        od = (o_dx * direction[o_lo], direction[o_lo])
        ud = (u_dx * direction[u_lo], direction[u_lo])
        sign = 1 if od[0] * ud[1] - od[1] * ud[0] > 0 else -1
        x, y = under_passes[c]
        crossings.append(Crossing(rename[arc_of[o_lo]], rename[x], rename[y], sign))

    vertices = []
    for ends, isth in sh.vertices:
        vertices.append(Vertex(tuple(rename[arc_of[p]] for p, _ in ends), rename[arc_of[isth[0]]]))

    boundary = []
    if kind == "tangle":
        for _, (p, e) in bottom + top:
            if p not in drop_pieces:
                boundary.append(rename[arc_of[p]])
    elif bottom or top:
        raise ValueError("closed diagrams cannot have boundary strands")
    d = SpineDiagram(kind, tuple(arcs), tuple(crossings), tuple(vertices), tuple(boundary))
    return check(d)


def _walk(sh: _Sheet, st, seen) -> list:
    path = []
    p, e = st
    while True:
        if p in seen:
            break
        seen.add(p)
        path.append((p, e))
        nxt = sh.link.get((p, 1 - e))
        if nxt is None:
            break
        (p, e), _, _ = nxt
    return path
