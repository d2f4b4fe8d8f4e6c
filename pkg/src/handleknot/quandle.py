"""Finite quandles and coloring counts.

Colorings follow two local rules.  At a crossing the outgoing under arc gets
x *^z o, where x is the incoming under arc, o the over arc and z the cycle
value of the over arc's component.  At a vertex the three incident arcs share
one color.  Only involutory quandles are supported, so orientations of the
under strands do not matter.
"""

from __future__ import annotations

import re

import os
from dataclasses import dataclass
from itertools import permutations, product

import numpy as np

from .diagram import CycleAssignment, DiagramError, SpineDiagram
from .groebner import is_prime
from .laurent import parse_poly

Z2_CYCLES = [(0, 0), (0, 1), (1, 0), (1, 1)]


@dataclass(frozen=True)
class FiniteQuandle:
    table: tuple[tuple[int, ...], ...]  # table[a][b] = a * b
    name: str = "explicit"
    modulus: int | None = None  # set for dihedral quandles

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, b: int, k: int) -> int:
        for _ in range(k):
            a = self.table[a][b]
        return a

    def inverse_op(self, c: int, b: int) -> int:
        for a in range(self.size):
            if self.table[a][b] == c:
                return a
        raise ValueError("not a quandle")


def axiom_violations(table) -> list[str]:
    m = len(table)
    out = []
    if any(len(r) != m for r in table):
        return ["table is not square"]
    if any(not 0 <= x < m for r in table for x in r):
        return ["table entries out of range"]
    if any(table[a][a] != a for a in range(m)):
        out.append("Q1 fails: a*a != a")
    for b in range(m):
        if len({table[a][b] for a in range(m)}) != m:
            out.append(f"Q3 fails: right multiplication by {b} is not a bijection")
            break
    for a, b, c in product(range(m), repeat=3):
        if table[table[a][b]][c] != table[table[a][c]][table[b][c]]:
            out.append("Q2 fails: (a*b)*c != (a*c)*(b*c)")
            break
    return out


def _checked(table, name, modulus=None) -> FiniteQuandle:
    problems = axiom_violations(table)
    if problems:
        raise ValueError("; ".join(problems))
    return FiniteQuandle(tuple(tuple(r) for r in table), name, modulus)


def dihedral(m: int) -> FiniteQuandle:
    if m < 2:
        raise ValueError("dihedral quandle needs m >= 2")
    return _checked([[(2 * b - a) % m for b in range(m)] for a in range(m)], f"dihedral:{m}", m)


def _polymod(coeffs: list[int], h: list[int], m: int) -> list[int]:
    """Reduce a coefficient list (low degree first) modulo monic h over Z_m."""
    c = [x % m for x in coeffs]
    dh = len(h) - 1
    for i in range(len(c) - 1, dh - 1, -1):
        q = c[i]
        if q:
            for j in range(dh + 1):
                c[i - dh + j] = (c[i - dh + j] - q * h[j]) % m
    c = (c + [0] * dh)[:dh]
    return c


def alexander(m: int, h: list[int], t: list[int] | None = None) -> FiniteQuandle:
    """Alexander quandle Z_m[t]/(h) with a*b = t a + (1-t) b.

    h is a coefficient list, lowest degree first; it must have unit leading
    and constant coefficients mod m.
    """
    from math import gcd
    if len(h) < 2:
        raise ValueError("h must have positive degree")
    if gcd(h[-1], m) != 1 or gcd(h[0], m) != 1:
        raise ValueError("leading and constant coefficients of h must be units mod m")
    inv = pow(h[-1], -1, m)
    h = [x * inv % m for x in h]
    dh = len(h) - 1
    tt = _polymod(t if t is not None else [0, 1], h, m)
    elems = list(product(range(m), repeat=dh))
    index = {e: i for i, e in enumerate(elems)}
    one_minus_t = _polymod([1 - tt[0]] + [-x for x in tt[1:]], h, m)

    def mul(x, y):
        out = [0] * (2 * dh)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                out[i + j] += a * b
        return _polymod(out, h, m)

    table = []
    for a in elems:
        row = []
        ta = mul(tt, list(a))
        for b in elems:
            v = [(x + y) % m for x, y in zip(ta, mul(one_minus_t, list(b)))]
            row.append(index[tuple(v)])
        table.append(row)
    return _checked(table, f"alexander:{m}:{h}")


def tetrahedral() -> FiniteQuandle:
    """Conjugation quandle a*b = b^-1 a b on the A_4-class of a 3-cycle."""
    def compose(f, g):  # f after g
        return tuple(f[g[i]] for i in range(4))

    def inv(f):
        out = [0] * 4
        for i, x in enumerate(f):
            out[x] = i
        return tuple(out)

    even = [q for q in permutations(range(4))
            if sum(q[i] > q[j] for i in range(4) for j in range(i + 1, 4)) % 2 == 0]
    c = (1, 2, 0, 3)
    elems = sorted({compose(compose(g, c), inv(g)) for g in even})
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[compose(compose(inv(b), a), b)] for b in elems] for a in elems]
    return _checked(table, "tetrahedral")


def make_quandle(spec) -> FiniteQuandle:
    """Build a quandle from 'dihedral:m', 'tetrahedral', 'alexander:m:h:t' or a table."""
    if not isinstance(spec, str):
        return _checked([list(r) for r in spec], "explicit")
    parts = spec.split(":")
    if parts[0] == "dihedral" and len(parts) == 2:
        return dihedral(int(parts[1]))
    if parts[0] == "tetrahedral" and len(parts) == 1:
        return tetrahedral()
    if parts[0] == "alexander" and len(parts) in (3, 4):
        m = int(parts[1])
        h = _univariate(parts[2])
        t = _univariate(parts[3]) if len(parts) == 4 else None
        return alexander(m, h, t)
    raise ValueError(f"unknown quandle spec {spec!r}")


def _univariate(text: str) -> list[int]:
    f = parse_poly(text.replace("x", "t"))
    if any(a for (a, _), _ in f.items()) or any(b < 0 for (_, b), _ in f.items()):
        raise ValueError(f"expected a polynomial in t, got {text!r}")
    deg = max(b for (_, b), _ in f.items())
    out = [0] * (deg + 1)
    for (_, b), c in f.items():
        out[b] = c
    return out


def quandle_type(Q: FiniteQuandle) -> int:
    """Least k with a *^k b = a for all a, b, floored at 2."""
    k = 1
    while True:
        if all(Q.power(a, b, k) == a for a in range(Q.size) for b in range(Q.size)):
            return max(k, 2)
        k += 1
        if k > Q.size ** 2 + 2:
            raise ValueError("type not found")


def isomorphic(Q: FiniteQuandle, R: FiniteQuandle) -> bool:
    if Q.size != R.size:
        return False
    n = Q.size
    for perm in permutations(range(n)):
        if all(perm[Q.table[a][b]] == R.table[perm[a]][perm[b]] for a in range(n) for b in range(n)):
            return True
    return False


# Coloring counts.

def brute_limit() -> int:
    return int(os.environ.get("HANDLEKNOT_BRUTE_LIMIT", "12"))


def _cycle_of(z, d: SpineDiagram):
    if isinstance(z, CycleAssignment):
        return z.value
    z1, z2 = z
    return lambda comp: (z1 if comp == "K1" else z2 if comp == "K2" else 0) % 2


def _require_involutory(Q: FiniteQuandle):
    if quandle_type(Q) != 2:
        raise ValueError("coloring counts need an involutory quandle")


def _constraints(d: SpineDiagram, z):
    """Crossing triples (x, o, y, power) and vertex equality pairs, as indices."""
    val = _cycle_of(z, d)
    cr = [(d.index(c.under_in), d.index(c.over), d.index(c.under_out), val(d.component(c.over)) % 2)
          for c in d.crossings]
    eq = []
    for v in d.vertices:
        i0 = d.index(v.ends[0])
        eq += [(i0, d.index(a)) for a in v.ends[1:]]
    return cr, eq


def _rank_mod_p(rows: np.ndarray, p: int, rhs: np.ndarray | None = None):
    """Row-reduce mod p; return (rank, consistent)."""
    A = rows.copy() % p
    if rhs is not None:
        A = np.concatenate([A, rhs.reshape(-1, 1) % p], axis=1)
    ncols = rows.shape[1]
    r = 0
    for c in range(ncols):
        if r == A.shape[0]:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        r += 1
    consistent = True
    if rhs is not None:
        consistent = not np.any(A[r:, ncols] % p)
    return r, consistent


def _linear_count(d: SpineDiagram, p: int, z, fixed: dict[int, int] | None = None) -> int:
    cr, eq = _constraints(d, z)
    n = len(d.arcs)
    rows, rhs = [], []
    for x, o, y, k in cr:
        row = np.zeros(n, dtype=np.int64)
        if k == 0:  # y = x
            row[y] += 1
            row[x] -= 1
        else:  # y = 2o - x
            row[y] += 1
            row[x] += 1
            row[o] -= 2
        rows.append(row)
        rhs.append(0)
    for a, b in eq:
        row = np.zeros(n, dtype=np.int64)
        row[a] += 1
        row[b] -= 1
        rows.append(row)
        rhs.append(0)
    for i, c in (fixed or {}).items():
        row = np.zeros(n, dtype=np.int64)
        row[i] = 1
        rows.append(row)
        rhs.append(c)
    if not rows:
        return p ** n
    A = np.array(rows, dtype=np.int64)
    rank, ok = _rank_mod_p(A, p, np.array(rhs, dtype=np.int64))
    return p ** (n - rank) if ok else 0


def _brute_count(d: SpineDiagram, Q: FiniteQuandle, z, fixed: dict[int, int] | None = None,
                 limit: int | None = None) -> int:
    """Exhaustive search with forced-move propagation."""
    n = len(d.arcs)
    limit = brute_limit() if limit is None else limit
    if n > limit:
        raise ValueError(f"brute-force coloring limited to {limit} arcs, diagram has {n}")
    cr, eq = _constraints(d, z)
    m = Q.size

    def propagate(col: list) -> bool:
        changed = True
        while changed:
            changed = False
            for x, o, y, k in cr:
                if col[o] is None:
                    continue
                if col[x] is not None:
                    v = Q.power(col[x], col[o], k)
                    if col[y] is None:
                        col[y] = v
                        changed = True
                    elif col[y] != v:
                        return False
                elif col[y] is not None:
                    col[x] = Q.power(col[y], col[o], k)  # involutory: inverse is itself
                    changed = True
            for a, b in eq:
                if col[a] is None and col[b] is not None:
                    col[a] = col[b]
                    changed = True
                elif col[b] is None and col[a] is not None:
                    col[b] = col[a]
                    changed = True
                elif col[a] is not None and col[a] != col[b]:
                    return False
        return True

    def search(col: list) -> int:
        if not propagate(col):
            return 0
        try:
            i = col.index(None)
        except ValueError:
            return 1
        total = 0
        for v in range(m):
            nxt = list(col)
            nxt[i] = v
            total += search(nxt)
        return total

    start: list = [None] * n
    for i, c in (fixed or {}).items():
        start[i] = c
    return search(start)


def count_colorings(d: SpineDiagram, Q: FiniteQuandle, z, method: str = "auto") -> int:
    _require_involutory(Q)
    if d.kind == "tangle":
        raise DiagramError("use count_tangle_colorings for tangles")
    if method == "brute" or (method == "auto" and Q.modulus is None):
        return _brute_count(d, Q, z)
    if Q.modulus is None or not is_prime(Q.modulus):
        raise ValueError("linear counting needs a dihedral quandle of prime order")
    return _linear_count(d, Q.modulus, z)


def count_tangle_colorings(t: SpineDiagram, Q: FiniteQuandle, z, boundary: dict[str, int] | list[int],
                           method: str = "auto") -> int:
    """Colorings of a tangle extending the given colors of its boundary arcs.

    boundary is either a map from arc name to color or a list of colors in
    the order of the tangle's boundary declaration.
    """
    _require_involutory(Q)
    if isinstance(boundary, (list, tuple)):
        if len(boundary) != len(t.boundary):
            raise ValueError("one color per boundary end required")
        pairs = list(zip(t.boundary, boundary))
    else:
        pairs = list(boundary.items())
    fixed: dict[int, int] = {}
    for a, c in pairs:
        i = t.index(a)
        if i in fixed and fixed[i] != c % Q.size:
            return 0
        fixed[i] = c % Q.size
    if method == "brute" or (method == "auto" and Q.modulus is None):
        return _brute_count(t, Q, z, fixed)
    return _linear_count(t, Q.modulus, z, fixed)


@dataclass(frozen=True)
class PhiPolynomial:
    exponents: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.exponents) != 4:
            raise ValueError("Phi has exactly four terms")
        object.__setattr__(self, "exponents", tuple(sorted(self.exponents)))

    @classmethod
    def parse(cls, text: str) -> "PhiPolynomial":
        f = parse_poly(re.sub(r"(\d)\s*t", r"\1*t", text.replace("x", "t")))
        exps = []
        for (a, b), c in f.items():
            if a or b < 0 or c < 0:
                raise ValueError(f"not a Phi polynomial: {text!r}")
            exps += [b] * c
        return cls(tuple(exps))

    def coefficients(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.exponents:
            out[e] = out.get(e, 0) + 1
        return out

    def __str__(self) -> str:
        parts = []
        for e, c in sorted(self.coefficients().items()):
            if e == 0:
                parts.append(str(c))
            else:
                mon = "t" if e == 1 else f"t^{e}"
                parts.append(mon if c == 1 else f"{c}{mon}")
        return "+".join(parts)


def _log_p(n: int, p: int) -> int:
    k = 0
    while n > 1:
        if n % p:
            raise AssertionError(f"coloring count {n} is not a power of {p}")
        n //= p
        k += 1
    return k


def phi_p(d: SpineDiagram, p: int, method: str = "auto") -> PhiPolynomial:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if d.kind not in ("handcuff", "link"):
        raise DiagramError("Phi_p is defined for handcuff and link diagrams")
    Q = dihedral(p)
    exps = []
    for z in Z2_CYCLES:
        n = count_colorings(d, Q, z, method=method)
        exps.append(_log_p(n, p) - 1)
    return PhiPolynomial(tuple(exps))
