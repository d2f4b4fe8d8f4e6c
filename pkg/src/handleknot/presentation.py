"""Finite presentations, Fox calculus, Smith normal form and Alexander matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .freegroup import FreeWord, format_word, parse_word
from .laurent import LaurentPoly, ZERO

Matrix = list[list[int]]


@dataclass(frozen=True)
class GroupPresentation:
    n: int
    relators: tuple[FreeWord, ...] = ()
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        rels = tuple(self.relators)
        for r in rels:
            if r.rank != self.n:
                raise ValueError(f"relator rank {r.rank} differs from generator count {self.n}")
        object.__setattr__(self, "relators", rels)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i + 1}" for i in range(self.n)))
        elif len(self.names) != self.n:
            raise ValueError("one name per generator required")


def deficiency(P: GroupPresentation) -> int:
    return P.n - len(P.relators)


# Group ring elements: {FreeWord: coefficient}.

GroupRingElement = dict


def _gr_add(acc: dict, w: FreeWord, c: int) -> None:
    v = acc.get(w, 0) + c
    if v:
        acc[w] = v
    else:
        acc.pop(w, None)


def gr_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for u, a in x.items():
        for v, b in y.items():
            _gr_add(out, u * v, a * b)
    return out


def gr_sum(*xs: dict) -> dict:
    out: dict = {}
    for x in xs:
        for w, c in x.items():
            _gr_add(out, w, c)
    return out


def fox_derivative(r: FreeWord, j: int) -> dict:
    """Fox derivative d r / d x_j as a group ring element."""
    if not 1 <= j <= r.rank:
        raise ValueError(f"generator index {j} out of range")
    out: dict = {}
    prefix: list[int] = []
    for a in r.letters:
        if a == j:
            _gr_add(out, FreeWord(r.rank, tuple(prefix)), 1)
        elif a == -j:
            _gr_add(out, FreeWord(r.rank, tuple(prefix) + (a,)), -1)
        prefix.append(a)
    return out


# Smith normal form over Z.

def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U A V = D diagonal, d_i | d_{i+1}, U and V unimodular."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    U, V = _identity(m), _identity(n)

    def swap_rows(i, k):
        D[i], D[k] = D[k], D[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (D, V):
            for row in M:
                row[j], row[k] = row[k], row[j]

    def add_row(dst, src, c):  # row_dst += c * row_src
        if c:
            D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
            U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        if c:
            for M in (D, V):
                for row in M:
                    row[dst] += c * row[src]

    for t in range(min(m, n)):
        # pivot: smallest nonzero entry in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    add_row(i, t, -q)
                    if D[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    add_col(j, t, -q)
                    if D[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold an offending row into row t
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def invariant_factors(A: Sequence[Sequence[int]]) -> list[int]:
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def exponent_matrix(P: GroupPresentation) -> Matrix:
    rows = []
    for r in P.relators:
        row = [0] * P.n
        for a in r.letters:
            row[abs(a) - 1] += 1 if a > 0 else -1
        rows.append(row)
    return rows


def _det2(m) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


class AbelianizationError(ValueError):
    pass


def abelianization_map(P: GroupPresentation) -> list[tuple[int, int]]:
    """Images of the generators in H_1 = Z^2, one exponent pair per generator.

    The basis is normalized so that the first pair of generators with
    unimodular images maps to (1,0) and (0,1).
    """
    R = exponent_matrix(P)
    n = P.n
    if R:
        D, _, V = smith_normal_form(R)
        diag = [D[i][i] for i in range(min(len(D), n))]
    else:
        diag, V = [], _identity(n)
    nonzero = [d for d in diag if d]
    free_rank = n - len(nonzero)
    torsion = [d for d in nonzero if d != 1]
    if free_rank != 2 or torsion:
        raise AbelianizationError(
            f"H_1 is Z^{free_rank}" + (f" + torsion {torsion}" if torsion else "") + ", expected Z^2")
    k = len(nonzero)
    images = [(V[i][k], V[i][k + 1]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M = [images[i], images[j]]
            det = _det2(M)
            if abs(det) == 1:
                # inverse of the matrix with rows images[i], images[j]
                (a, b), (c, d) = M
                inv = [[d * det, -b * det], [-c * det, a * det]]
                return [(x * inv[0][0] + y * inv[1][0], x * inv[0][1] + y * inv[1][1])
                        for x, y in images]
    return images


def alexander_matrix(P: GroupPresentation,
                     images: list[tuple[int, int]] | None = None) -> list[list[LaurentPoly]]:
    """Abelianized Fox Jacobian, one row per relator."""
    if images is None:
        images = abelianization_map(P)
    rows = []
    for r in P.relators:
        acc: list[dict] = [dict() for _ in range(P.n)]
        a0 = b0 = 0
        for x in r.letters:
            g = abs(x) - 1
            ea, eb = images[g]
            if x > 0:
                key = (a0, b0)
                acc[g][key] = acc[g].get(key, 0) + 1
                a0, b0 = a0 + ea, b0 + eb
            else:
                a0, b0 = a0 - ea, b0 - eb
                key = (a0, b0)
                acc[g][key] = acc[g].get(key, 0) - 1
        rows.append([LaurentPoly(d) if d else ZERO for d in acc])
    return rows


def parse_presentation(text: str) -> GroupPresentation:
    n = None
    rels = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = line.partition(":")
        key = key.strip()
        try:
            if key == "gens":
                n = int(val)
            elif key == "rel":
                if n is None:
                    raise ValueError("'gens:' must precede relators")
                rels.append(parse_word(val, rank=n, prefix="x"))
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if n is None:
        raise ValueError("missing 'gens:' line")
    return GroupPresentation(n, tuple(rels))


def format_presentation(P: GroupPresentation) -> str:
    lines = [f"gens: {P.n}"]
    if any(name != f"x{i + 1}" for i, name in enumerate(P.names)):
        lines.append("# " + " ".join(f"x{i + 1}={name}" for i, name in enumerate(P.names)))
    lines += [f"rel: {format_word(r, prefix='x')}" for r in P.relators]
    return "\n".join(lines) + "\n"
