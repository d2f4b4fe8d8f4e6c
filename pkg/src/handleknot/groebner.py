"""Buchberger's algorithm over F_p with graded-lex order.

Polynomials are dicts from exponent tuples to residues in 1..p-1.  All
tuples in one computation must have the same length.
"""

from __future__ import annotations

from itertools import combinations

Poly = dict


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _key(e: tuple[int, ...]):
    return (sum(e), e)


def lead(f: Poly) -> tuple[int, ...]:
    return max(f, key=_key)


def normalize(f: Poly, p: int) -> Poly:
    return {e: c % p for e, c in f.items() if c % p}


def _monic(f: Poly, p: int) -> Poly:
    inv = pow(f[lead(f)], -1, p)
    return {e: c * inv % p for e, c in f.items()}


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(f: Poly, g: Poly, c: int, shift, p: int) -> Poly:
    out = dict(f)
    for e, v in g.items():
        k = tuple(x + y for x, y in zip(e, shift))
        nv = (out.get(k, 0) - c * v) % p
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def reduce_poly(f: Poly, G: list[Poly], p: int) -> Poly:
    """Full normal form of f modulo the list G (each monic)."""
    f = normalize(f, p)
    rem: Poly = {}
    leads = [(lead(g), g) for g in G]
    while f:
        lt = lead(f)
        c = f[lt]
        for lg, g in leads:
            if _divides(lg, lt):
                shift = tuple(x - y for x, y in zip(lt, lg))
                f = _sub_scaled(f, g, c, shift, p)
                break
        else:
            rem[lt] = c
            del f[lt]
    return rem


def _spoly(f: Poly, g: Poly, p: int) -> Poly:
    lf, lg = lead(f), lead(g)
    lcm = tuple(max(x, y) for x, y in zip(lf, lg))
    sf = tuple(x - y for x, y in zip(lcm, lf))
    sg = tuple(x - y for x, y in zip(lcm, lg))
    a = {tuple(x + y for x, y in zip(e, sf)): c for e, c in f.items()}
    return _sub_scaled(a, g, 1, sg, p)


def groebner_mod_p(polys: list[Poly], p: int) -> list[Poly]:
    """Reduced Groebner basis of the ideal generated by polys over F_p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    G = [_monic(f, p) for f in (normalize(f, p) for f in polys) if f]
    if not G:
        return []
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        i, j = pairs.pop()
        li, lj = lead(G[i]), lead(G[j])
        if all(min(x, y) == 0 for x, y in zip(li, lj)):
            continue  # coprime leading monomials
        h = reduce_poly(_spoly(G[i], G[j], p), G, p)
        if h:
            h = _monic(h, p)
            if not any(h):  # constant: unit ideal
                return [{tuple(0 for _ in lead(h)): 1}]
            G.append(h)
            pairs.extend((k, len(G) - 1) for k in range(len(G) - 1))
    return _interreduce(G, p)


def _interreduce(G: list[Poly], p: int) -> list[Poly]:
    G = sorted(G, key=lambda g: _key(lead(g)))
    minimal: list[Poly] = []
    for g in G:
        if not any(_divides(lead(h), lead(g)) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(_monic(reduce_poly(g, others, p), p))
    return sorted(out, key=lambda g: _key(lead(g)))


def is_unit_basis(G: list[Poly]) -> bool:
    return any(len(g) == 1 and not any(lead(g)) for g in G)
