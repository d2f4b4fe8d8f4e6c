"""The Laurent ring Lambda = Z[t1^{+-1}, t2^{+-1}].

Polynomials are immutable maps from exponent pairs to nonzero integers.
GCDs are computed in Z[t1, t2] by a primitive pseudo-remainder sequence in
t2 over Z[t1]; no external algebra system is needed.
"""

from __future__ import annotations

import re
from functools import reduce as _fold
from math import gcd as igcd
from typing import Iterable, Mapping

Exp = tuple[int, int]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[(int(k[0]), int(k[1]))] = int(c)
        self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def mono(cls, a: int, b: int, c: int = 1) -> "LaurentPoly":
        return cls({(a, b): c})

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({k: c * other for k, c in self._terms.items()})
        out: dict[Exp, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            (a, b), c = next(iter(self._terms.items()))
            return LaurentPoly.mono(-a * -n, -b * -n, c ** -n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # ring structure
    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def shift(self, a: int, b: int) -> "LaurentPoly":
        return LaurentPoly({(x + a, y + b): c for (x, y), c in self._terms.items()})

    def min_exponents(self) -> Exp:
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def leading(self) -> tuple[Exp, int]:
        """Lexicographically greatest exponent pair and its coefficient."""
        k = max(self._terms)
        return k, self._terms[k]

    def content(self) -> int:
        return _fold(igcd, self._terms.values(), 0)

    def evaluate(self, x, y):
        return sum(c * x ** a * y ** b for (a, b), c in self._terms.items())


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
T1 = LaurentPoly.mono(1, 0)
T2 = LaurentPoly.mono(0, 1)


def involution_sigma(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly({(-a, -b): c for (a, b), c in f.items()})


def augmentation_eval(f: LaurentPoly) -> int:
    return sum(c for _, c in f.items())


def _monic_shift(f: LaurentPoly) -> LaurentPoly:
    a, b = f.min_exponents()
    return f.shift(-a, -b)


def preferred_generator(f: LaurentPoly) -> LaurentPoly:
    """Associate of f in Z[t1,t2], not divisible by t1 or t2, sign-normalized."""
    if f.is_zero():
        raise ValueError("zero polynomial has no preferred generator")
    g = _monic_shift(f)
    return -g if g.leading()[1] < 0 else g


def is_associate(f: LaurentPoly, g: LaurentPoly) -> bool:
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    return preferred_generator(f) == preferred_generator(g)


def sl2_substitute(f: LaurentPoly, m) -> LaurentPoly:
    """t1 -> t1^m11 t2^m21, t2 -> t1^m12 t2^m22."""
    (m11, m12), (m21, m22) = m
    if abs(m11 * m22 - m12 * m21) != 1:
        raise ValueError("substitution matrix must be unimodular")
    out: dict[Exp, int] = {}
    for (a, b), c in f.items():
        k = (m11 * a + m12 * b, m21 * a + m22 * b)
        out[k] = out.get(k, 0) + c
    return LaurentPoly(out)


# Division in Z[t1, t2], lex order with t1 > t2.

def _divmod_poly(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly] | None:
    """Exact division of ordinary polynomials; None if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError
    (ga, gb), gc = g.leading()
    q: dict[Exp, int] = {}
    r = f
    while not r.is_zero():
        (ra, rb), rc = r.leading()
        if ra < ga or rb < gb or rc % gc:
            return None
        k = (ra - ga, rb - gb)
        c = rc // gc
        q[k] = q.get(k, 0) + c
        r = r - g * LaurentPoly({k: c})
    return LaurentPoly(q), r


def divide_exact(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Return h with f = g*h in Lambda, or None when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError
    if f.is_zero():
        return ZERO
    ga, gb = g.min_exponents()
    fa, fb = f.min_exponents()
    res = _divmod_poly(f.shift(-fa, -fb), g.shift(-ga, -gb))
    if res is None:
        return None
    return res[0].shift(fa - ga, fb - gb)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    return divide_exact(f, g) is not None


# Univariate helpers on dense coefficient lists (index = degree of t1).

def _u_trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _u_mul(p: list[int], q: list[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _u_trim(out)


def _u_sub(p: list[int], q: list[int]) -> list[int]:
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)]
    return _u_trim(out)


def _u_content(p: list[int]) -> int:
    return _fold(igcd, p, 0)


def _u_prim(p: list[int]) -> list[int]:
    c = _u_content(p)
    if c == 0:
        return []
    if p[-1] < 0:
        c = -c
    return [a // c for a in p]


def _u_prem(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    lb, db = b[-1], len(b) - 1
    while len(a) - 1 >= db and a:
        la, da = a[-1], len(a) - 1
        a = [x * lb for x in a]
        shift = da - db
        for i, x in enumerate(b):
            a[i + shift] -= la * x
        _u_trim(a)
    return a


def _u_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while a and len(a) >= len(b):
        shift = len(a) - len(b)
        c, rem = divmod(a[-1], b[-1])
        assert rem == 0
        q[shift] = c
        for i, x in enumerate(b):
            a[i + shift] -= c * x
        _u_trim(a)
    assert not a
    return _u_trim(q)


def _u_gcd(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        p = a or b
        return [-x for x in p] if p and p[-1] < 0 else list(p)
    c = igcd(_u_content(a), _u_content(b))
    a, b = _u_prim(a), _u_prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _u_prem(a, b)
        a, b = b, _u_prim(r) if r else []
    return [c * x for x in _u_prim(a)]


# Bivariate: a polynomial in t2 whose coefficients are dense lists in t1.

def _to_rec(f: LaurentPoly) -> list[list[int]]:
    if f.is_zero():
        return []
    db = max(k[1] for k, _ in f.items())
    rows: list[list[int]] = [[] for _ in range(db + 1)]
    for (a, b), c in f.items():
        row = rows[b]
        if len(row) <= a:
            row.extend([0] * (a + 1 - len(row)))
        row[a] += c
    return [_u_trim(r) for r in rows]


def _from_rec(rows: list[list[int]]) -> LaurentPoly:
    return LaurentPoly({(a, b): c for b, r in enumerate(rows) for a, c in enumerate(r) if c})


def _r_trim(p: list[list[int]]) -> list[list[int]]:
    while p and not p[-1]:
        p.pop()
    return p


def _r_content(p: list[list[int]]) -> list[int]:
    out: list[int] = []
    for row in p:
        if row:
            out = _u_gcd(out, row)
    return out


def _r_div_content(p, c):
    return [_u_exact_div(row, c) if row else [] for row in p]


def _r_prem(a, b):
    a = [list(r) for r in a]
    lb, db = b[-1], len(b) - 1
    while a and len(a) - 1 >= db:
        la, shift = a[-1], len(a) - 1 - db
        a = [_u_mul(r, lb) for r in a]
        for i, r in enumerate(b):
            a[i + shift] = _u_sub(a[i + shift], _u_mul(la, r))
        _r_trim(a)
    return a


def _r_prim(p):
    c = _r_content(p)
    return _r_div_content(p, c) if c else p


def _poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """GCD of two nonzero ordinary polynomials in Z[t1, t2]."""
    a, b = _to_rec(f), _to_rec(g)
    ca, cb = _r_content(a), _r_content(b)
    c = _u_gcd(ca, cb)
    a, b = _r_div_content(a, ca), _r_div_content(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _r_prem(a, b)
        a, b = b, (_r_prim(r) if r else [])
    a = _r_prim(a)
    return _from_rec([_u_mul(row, c) if row else [] for row in a])


def gcd_lambda(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zeros is undefined")
    if f.is_zero():
        return preferred_generator(g)
    if g.is_zero():
        return preferred_generator(f)
    return preferred_generator(_poly_gcd(_monic_shift(f), _monic_shift(g)))


def gcd_many(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        if p.is_zero():
            continue
        out = preferred_generator(p) if out.is_zero() else gcd_lambda(out, p)
        if out == ONE:
            break
    if out.is_zero():
        raise ValueError("gcd of zero polynomials is undefined")
    return out


# Text syntax: "c*t1^a*t2^b" terms; s and t are accepted for t1 and t2.

_TERM_SPLIT = re.compile(r"(?<!\^)(?=[+-])")
_FACTOR = re.compile(r"^(t1|t2|s|t)(?:\^\(?(-?\d+)\)?)?$")


def parse_poly(text: str) -> LaurentPoly:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    out = ZERO
    for term in _TERM_SPLIT.split(s):
        if not term:
            continue
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        if not term:
            raise ValueError(f"dangling sign in {text!r}")
        coeff, a, b = sign, 0, 0
        for fac in term.split("*"):
            if re.fullmatch(r"\d+", fac):
                coeff *= int(fac)
                continue
            m = _FACTOR.match(fac)
            if not m:
                raise ValueError(f"bad factor {fac!r} in {text!r}")
            e = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(1) in ("t1", "s"):
                a += e
            else:
                b += e
        out = out + LaurentPoly.mono(a, b, coeff)
    return out


def _fmt_var(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_poly(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for (a, b), c in sorted(f.items()):
        mon = [_fmt_var("t1", a) for _ in [0] if a] + [_fmt_var("t2", b) for _ in [0] if b]
        body = "*".join(mon)
        mag = abs(c)
        if not body:
            txt = str(mag)
        elif mag == 1:
            txt = body
        else:
            txt = f"{mag}*{body}"
        parts.append(("-" if c < 0 else "+", txt))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sgn, txt in parts[1:]:
        out += f" {sgn} {txt}"
    return out
