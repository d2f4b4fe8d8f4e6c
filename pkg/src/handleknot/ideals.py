"""Elementary ideals of matrices over Lambda and the Alexander obstructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

from .groebner import groebner_mod_p, is_prime, is_unit_basis, reduce_poly
from .laurent import (ONE, ZERO, LaurentPoly, augmentation_eval, divide_exact, gcd_many,
                      involution_sigma, is_associate, preferred_generator)
from .presentation import GroupPresentation, abelianization_map, alexander_matrix, smith_normal_form


@dataclass(frozen=True)
class LambdaMatrix:
    rows: tuple[tuple[LaurentPoly, ...], ...]
    ncols: int

    @classmethod
    def of(cls, rows: Sequence[Sequence[LaurentPoly]], ncols: int | None = None) -> "LambdaMatrix":
        rows = tuple(tuple(r) for r in rows)
        n = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is not rectangular")
        return cls(rows, n)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols


def _as_matrix(B) -> LambdaMatrix:
    return B if isinstance(B, LambdaMatrix) else LambdaMatrix.of(B)

WITNESS_PRIMES = [p for p in range(2, 98) if is_prime(p)]


@dataclass(frozen=True)
class IdealGens:
    gens: tuple[LaurentPoly, ...] = ()
    full: bool = False

    def __post_init__(self):
        seen = []
        full = self.full
        for g in self.gens:
            if g.is_zero():
                continue
            g = preferred_generator(g)
            if g == ONE:
                full = True
            if g not in seen:
                seen.append(g)
        if full:
            seen = []
        seen.sort(key=lambda f: (len(f.terms), sorted(f.items())))
        object.__setattr__(self, "gens", tuple(seen))
        object.__setattr__(self, "full", full)

    @classmethod
    def of(cls, *gens: LaurentPoly) -> "IdealGens":
        return cls(tuple(gens))

    def is_zero(self) -> bool:
        return not self.full and not self.gens

    def generators(self) -> tuple[LaurentPoly, ...]:
        return (ONE,) if self.full else self.gens

    def __str__(self) -> str:
        if self.full:
            return "(1)"
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


FULL = IdealGens(full=True)
ZERO_IDEAL = IdealGens()


def determinant(M: LambdaMatrix) -> LaurentPoly:
    """Laplace expansion along rows, memoized on the set of used columns."""
    k = len(M)
    if k == 0:
        return ONE
    memo: dict[int, LaurentPoly] = {}

    def rec(row: int, mask: int) -> LaurentPoly:
        if row == k:
            return ONE
        if mask in memo:
            return memo[mask]
        acc = ZERO
        sign = 1
        for j in range(k):
            if mask >> j & 1:
                continue
            e = M[row][j]
            if not e.is_zero():
                sub = rec(row + 1, mask | (1 << j))
                if not sub.is_zero():
                    acc = acc + e * sub * sign
            sign = -sign
        memo[mask] = acc
        return acc

    return rec(0, 0)


def elementary_ideal(B, d: int) -> IdealGens:
    B = _as_matrix(B)
    s, n = B.shape
    B = B.rows
    k = n - d
    if k <= 0:
        return FULL
    if k > s:
        return ZERO_IDEAL
    gens = []
    for rows in combinations(range(s), k):
        for cols in combinations(range(n), k):
            det = determinant([[B[i][j] for j in cols] for i in rows])
            if not det.is_zero():
                if det.is_unit():
                    return FULL
                gens.append(det)
    return IdealGens(tuple(gens))


def simplify_matrix(B) -> LambdaMatrix:
    """Eliminate unit pivots and drop zero rows.

    Removing the row and column of a unit pivot after clearing its column
    leaves every E_d unchanged (same index d), because both the column count
    and the minor size drop by one.
    """
    B = _as_matrix(B)
    M = [list(r) for r in B.rows]
    n = B.ncols
    while True:
        M = [r for r in M if any(not e.is_zero() for e in r)]
        piv = None
        for i, r in enumerate(M):
            for j, e in enumerate(r):
                if e.is_unit():
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            return LambdaMatrix.of(M, n)
        i, j = piv
        u_inv = M[i][j] ** -1
        prow = M[i]
        for k, r in enumerate(M):
            if k == i or r[j].is_zero():
                continue
            c = r[j] * u_inv
            M[k] = [x - c * y for x, y in zip(r, prow)]
        M = [[e for jj, e in enumerate(r) if jj != j] for kk, r in enumerate(M) if kk != i]
        n -= 1


def delta(I: IdealGens) -> LaurentPoly:
    if I.is_zero():
        raise ValueError("delta of the zero ideal is undefined")
    if I.full:
        return ONE
    return gcd_many(I.gens)


def unitary_test(I: IdealGens) -> bool:
    if I.full:
        return True
    g = 0
    for f in I.gens:
        g = gcd(g, augmentation_eval(f))
    return g == 1


def symmetry_test(f: LaurentPoly) -> bool:
    if f.is_zero():
        raise ValueError("symmetry of zero is undefined")
    return preferred_generator(f) == preferred_generator(involution_sigma(f))


# Reduction mod p into F_p[t1, t2, y] with y t1 t2 = 1.

def _to_fp(f: LaurentPoly, p: int) -> dict:
    a0, b0 = f.min_exponents()
    out = {}
    for (a, b), c in f.items():
        if c % p:
            out[(a - a0, b - b0, 0)] = c % p
    return out


_SATURATE = {(1, 1, 1): 1, (0, 0, 0): -1}


def _laurent_basis(I: IdealGens, p: int) -> list[dict]:
    polys = [_to_fp(g, p) for g in I.generators()]
    return groebner_mod_p([q for q in polys if q] + [dict(_SATURATE)], p)


def is_unit_ideal_laurent_mod_p(I: IdealGens, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return is_unit_basis(_laurent_basis(I, p))


def member_mod_p(f: LaurentPoly, I: IdealGens, p: int, basis=None) -> bool:
    """Whether f lies in the image of I in F_p[t1^{+-1}, t2^{+-1}]."""
    G = basis if basis is not None else _laurent_basis(I, p)
    q = _to_fp(f, p) if not f.is_zero() else {}
    return not reduce_poly(q, G, p) if q else True


@dataclass(frozen=True)
class Principality:
    verdict: str  # "Yes", "No", "Unknown"
    generator: LaurentPoly | None = None
    witness: int | None = None
    method: str = ""

    def __str__(self) -> str:
        if self.verdict == "Yes":
            return f"Yes({self.generator})"
        if self.verdict == "No":
            return f"No({self.witness})"
        return "Unknown"


def _box(deg: int):
    return [(a, b) for a in range(-deg, deg + 1) for b in range(-deg, deg + 1)
            if abs(a) + abs(b) <= deg]


def solve_integer(A: list[list[int]], rhs: list[int]) -> list[int] | None:
    """An integer solution of A x = rhs, or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    D, U, V = smith_normal_form(A)
    c = [sum(U[i][k] * rhs[k] for k in range(m)) for i in range(m)]
    y = [0] * n
    for i in range(m):
        d = D[i][i] if i < n else 0
        if d == 0:
            if c[i]:
                return None
        else:
            if c[i] % d:
                return None
            y[i] = c[i] // d
    return [sum(V[j][k] * y[k] for k in range(n)) for j in range(n)]


def certificate_search(target: LaurentPoly, gens: Sequence[LaurentPoly], deg: int = 4):
    """Cofactors c_i with support in a small box and sum c_i g_i = target."""
    monos = _box(deg)
    cols = []  # one column per (generator, monomial)
    for g in gens:
        for a, b in monos:
            cols.append(g.shift(a, b))
    rows_keys = sorted({k for col in cols for k in col.terms} | set(target.terms))
    index = {k: i for i, k in enumerate(rows_keys)}
    A = [[0] * len(cols) for _ in rows_keys]
    for j, col in enumerate(cols):
        for k, c in col.items():
            A[index[k]][j] = c
    rhs = [0] * len(rows_keys)
    for k, c in target.items():
        rhs[index[k]] = c
    x = solve_integer(A, rhs)
    if x is None:
        return None
    out = []
    for gi in range(len(gens)):
        co = {}
        for mi, (a, b) in enumerate(monos):
            v = x[gi * len(monos) + mi]
            if v:
                co[(a, b)] = v
        out.append(LaurentPoly(co))
    return out


def principality_check(I: IdealGens, primes: Sequence[int] = WITNESS_PRIMES,
                       search_degree: int = 4) -> Principality:
    if I.is_zero() or I.full:
        raise ValueError("principality is only checked for proper nonzero ideals")
    D = delta(I)
    if any(is_associate(g, D) for g in I.gens):
        return Principality("Yes", D, method="generator")
    for p in primes:
        if not member_mod_p(D, I, p):
            return Principality("No", witness=p, method="mod-p")
    # every generator is a multiple of D, so it suffices to reach 1 from the quotients
    quotients = [divide_exact(g, D) for g in I.gens]
    if certificate_search(ONE, quotients, search_degree) is not None:
        return Principality("Yes", D, method="certificate")
    return Principality("Unknown", method="inconclusive")


def ideal_contains(I: IdealGens, f: LaurentPoly, search_degree: int = 4) -> bool | None:
    """True with a certificate, False when refuted mod some prime, else None."""
    if f.is_zero() or I.full:
        return True
    if I.is_zero():
        return False
    for p in WITNESS_PRIMES[:8]:
        if not member_mod_p(f, I, p):
            return False
    if any(divide_exact(f, g) is not None for g in I.gens):
        return True
    return True if certificate_search(f, list(I.gens), search_degree) is not None else None


def ideals_equal(I: IdealGens, J: IdealGens) -> bool | None:
    verdicts = [ideal_contains(J, g) for g in I.generators() if not I.is_zero()]
    verdicts += [ideal_contains(I, g) for g in J.generators() if not J.is_zero()]
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    if any(v is False for v in verdicts):
        return False
    return True if all(verdicts) else None


def seifert_presentation(A11, A12, A22, g1: int, g2: int) -> LambdaMatrix:
    """Block presentation matrix built from Seifert-type linking matrices."""
    n1, n2 = 2 * g1, 2 * g2
    if len(A11) != n1 or any(len(r) != n1 for r in A11):
        raise ValueError("A11 must be 2g1 x 2g1")
    if len(A22) != n2 or any(len(r) != n2 for r in A22):
        raise ValueError("A22 must be 2g2 x 2g2")
    if n1 and n2 and (len(A12) != n1 or any(len(r) != n2 for r in A12)):
        raise ValueError("A12 must be 2g1 x 2g2")
    t1, t2 = LaurentPoly.mono(1, 0), LaurentPoly.mono(0, 1)
    B = [[ZERO] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            B[i][j] = LaurentPoly.const(A11[j][i]) - t1 * A11[i][j]
        for j in range(n2):
            B[i][n1 + j] = (1 - t1) * A12[i][j]
    for i in range(n2):
        for j in range(n1):
            B[n1 + i][j] = (1 - t2) * A12[j][i]
        for j in range(n2):
            B[n1 + i][n1 + j] = LaurentPoly.const(A22[j][i]) - t2 * A22[i][j]
    return LambdaMatrix.of(B, n1 + n2)


@dataclass
class AlexanderReport:
    E0_is_zero: bool
    E1_is_zero: bool
    E2: IdealGens
    delta2: LaurentPoly
    unitary: bool
    principal: Principality
    symmetric: str  # "Yes", "No", "NotApplicable"
    images: list[tuple[int, int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "E0_is_zero": self.E0_is_zero,
            "E1_is_zero": self.E1_is_zero,
            "E2": [str(g) for g in self.E2.generators()] if not self.E2.is_zero() else [],
            "delta2": str(self.delta2),
            "unitary": self.unitary,
            "principal": {"verdict": self.principal.verdict,
                          "generator": None if self.principal.generator is None else str(self.principal.generator),
                          "witness": self.principal.witness},
            "symmetric": self.symmetric,
            "warnings": list(self.warnings),
        }


def alexander_report(P: GroupPresentation) -> AlexanderReport:
    images = abelianization_map(P)
    B = simplify_matrix(LambdaMatrix.of(alexander_matrix(P, images), P.n))
    E0 = elementary_ideal(B, 0)
    E1 = elementary_ideal(B, 1)
    E2 = elementary_ideal(B, 2)
    warnings = []
    if not (E0.is_zero() and E1.is_zero()):
        warnings.append("E0 or E1 is nonzero: input is not a genus-2 handlebody complement group")
    unitary = unitary_test(E2)
    if not unitary:
        warnings.append("E2 is not unitary: input is not a genus-2 handlebody complement group")
    if E2.is_zero():
        return AlexanderReport(E0.is_zero(), E1.is_zero(), E2, ZERO, False,
                               Principality("Unknown", method="zero ideal"), "NotApplicable",
                               images, warnings)
    d2 = delta(E2)
    if E2.full:
        princ = Principality("Yes", ONE, method="full ring")
    else:
        princ = principality_check(E2)
    sym = "NotApplicable"
    if princ.verdict == "Yes":
        sym = "Yes" if symmetry_test(princ.generator) else "No"
    return AlexanderReport(E0.is_zero(), E1.is_zero(), E2, d2, unitary, princ, sym, images, warnings)

