"""Words in finitely generated free groups.

A letter is a nonzero int: ``k`` stands for the generator t_k and ``-k`` for
its inverse.  Decision procedures (primitivity, base recognition) are only
implemented in rank 2.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

PASSES = "PassesNecessaryCondition"
NOT_PRIMITIVE = "NotPrimitive"


def _free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        for a in self.letters:
            if a == 0 or abs(a) > self.rank:
                raise ValueError(f"generator index {a} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", _free_reduce(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(max(self.rank, other.rank), self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, tuple(-a for a in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(n))

    def conj(self, g: "FreeWord") -> "FreeWord":
        """g * self * g^-1"""
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def syllables(self) -> list[tuple[int, int]]:
        return syllables(self.letters)

    def __str__(self) -> str:
        return format_word(self)


def reduce(raw: Sequence[int] | Sequence[tuple[int, int]], rank: int = 2) -> FreeWord:
    """Freely reduce a letter sequence.

    Accepts signed ints or ``(generator, exponent)`` pairs with exponent +-1.
    """
    letters = []
    for x in raw:
        if isinstance(x, tuple):
            g, e = x
            if e not in (1, -1):
                raise ValueError(f"exponent must be +1 or -1, got {e}")
            letters.append(g * e)
        else:
            letters.append(x)
    return FreeWord(rank, tuple(letters))


def gen(i: int, rank: int = 2) -> FreeWord:
    return FreeWord(rank, (i,))


def identity(rank: int = 2) -> FreeWord:
    return FreeWord(rank, ())


def word(*parts: tuple[int, int], rank: int = 2) -> FreeWord:
    """Build a word from syllables, e.g. word((1, 2), (2, -1)) = t1^2 t2^-1."""
    letters: list[int] = []
    for g, e in parts:
        letters.extend([g if e > 0 else -g] * abs(e))
    return FreeWord(rank, tuple(letters))


def syllables(letters: Sequence[int]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for a in letters:
        g, e = abs(a), (1 if a > 0 else -1)
        if out and out[-1][0] == g:
            out[-1] = (g, out[-1][1] + e)
        else:
            out.append((g, e))
    return out


def _letters_from_syllables(syl: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    out: list[int] = []
    for g, e in syl:
        out.extend([g if e > 0 else -g] * abs(e))
    return tuple(out)


def cyclic_reduce(w: FreeWord) -> FreeWord:
    a = list(w.letters)
    i, j = 0, len(a) - 1
    while i < j and a[i] == -a[j]:
        i += 1
        j -= 1
    return FreeWord(w.rank, tuple(a[i:j + 1]))


def cyclic_length(w: FreeWord) -> int:
    return len(cyclic_reduce(w))


def _letter_key(a: int) -> int:
    # t1 < t1^-1 < t2 < t2^-1 < ...
    return 2 * (abs(a) - 1) + (a < 0)


def _least_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    if not letters:
        return letters
    n = len(letters)
    best = None
    for i in range(n):
        rot = letters[i:] + letters[:i]
        key = [_letter_key(a) for a in rot]
        if best is None or key < best[0]:
            best = (key, rot)
    return best[1]


def cyclic_normal_form(w: FreeWord) -> list[tuple[int, int]]:
    """Syllable form of the canonical cyclic rotation of the cyclic reduction.

    The canonical rotation is the lexicographically least one under
    t1 < t1^-1 < t2 < t2^-1.  When t1 occurs the least rotation already starts
    at a t1 syllable, since a rotation starting mid-syllable is beaten by the
    one starting at that syllable.
    """
    return syllables(_least_rotation(cyclic_reduce(w).letters))


def cyclic_word(w: FreeWord) -> tuple[int, ...]:
    """Canonical representative of the conjugacy class of w, as letters."""
    return _least_rotation(cyclic_reduce(w).letters)


def abelianize(w: FreeWord) -> tuple[int, ...]:
    out = [0] * w.rank
    for a in w.letters:
        out[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(out)


def _indivisible(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def nielsen_sign_filter(w: FreeWord) -> str:
    """Necessary condition for primitivity in rank 2.

    In the cyclic normal form of a primitive element all t1-exponents share
    one sign and so do all t2-exponents.
    """
    if not _indivisible(abelianize(w)):
        return NOT_PRIMITIVE
    syl = cyclic_normal_form(w)
    for g in (1, 2):
        signs = {e > 0 for h, e in syl if h == g}
        if len(signs) > 1:
            return NOT_PRIMITIVE
    return PASSES


# Rank-2 Whitehead automorphisms that are not inner and not permutations:
# x -> x y^e and x -> y^e x for x != y generators, e = +-1.  Together with the
# letter permutations (which never change length) they generate Aut(F_2).
def _whitehead_images() -> list[dict[int, tuple[int, ...]]]:
    autos = []
    for x, y in ((1, 2), (2, 1)):
        for e in (1, -1):
            autos.append({x: (x, y * e), y: (y,)})
            autos.append({x: (y * e, x), y: (y,)})
    return autos


WHITEHEAD = _whitehead_images()


def apply_map(w: FreeWord, images: dict[int, tuple[int, ...]]) -> FreeWord:
    """Apply the endomorphism given by generator images (positive keys)."""
    out: list[int] = []
    for a in w.letters:
        img = images[abs(a)]
        if a > 0:
            out.extend(img)
        else:
            out.extend(-b for b in reversed(img))
    return FreeWord(w.rank, tuple(out))


def whitehead_minimize(w: FreeWord) -> FreeWord:
    """Greedy cyclic-length reduction by rank-2 Whitehead automorphisms.

    By Whitehead's peak-reduction theorem, if w is not of minimal cyclic
    length in its Aut(F_2)-orbit, some Whitehead automorphism shortens it, and
    in rank 2 the eight maps above cover all of them up to inner and
    permutation automorphisms.  So the fixpoint is a minimal-length element.
    """
    cur = cyclic_reduce(w)
    while True:
        n = len(cur)
        for images in WHITEHEAD:
            cand = cyclic_reduce(apply_map(cur, images))
            if len(cand) < n:
                cur = cand
                break
        else:
            return cur


def is_primitive(w: FreeWord) -> bool:
    if w.rank != 2:
        raise ValueError("primitivity is only decided in rank 2")
    if nielsen_sign_filter(w) == NOT_PRIMITIVE:
        return False
    return len(whitehead_minimize(w)) == 1


# Nielsen reduction of pairs.

def _pair_moves(u: FreeWord, v: FreeWord):
    for e in (1, -1):
        ve, ue = v ** e, u ** e
        yield u * ve, v
        yield ve * u, v
        yield u, v * ue
        yield u, ue * v


def _total(pair) -> int:
    return len(pair[0]) + len(pair[1])


def _key(pair) -> tuple:
    u, v = pair
    a = min(u.letters, u.inverse().letters)
    b = min(v.letters, v.inverse().letters)
    return tuple(sorted((a, b)))


def nielsen_reduce(u: FreeWord, v: FreeWord, plateau: int = 2000) -> tuple[FreeWord, FreeWord]:
    """Reduce a pair by elementary Nielsen moves until no move shortens it.

    Strictly length-decreasing moves are applied greedily.  When none exists
    a bounded breadth-first search over length-preserving moves looks for a
    pair that admits a decreasing move.
    """
    pair = (u, v)
    while True:
        if pair[0].is_identity() or pair[1].is_identity():
            return pair
        best = min(_pair_moves(*pair), key=_total)
        if _total(best) < _total(pair):
            pair = best
            continue
        escaped = _escape_plateau(pair, plateau)
        if escaped is None:
            return pair
        pair = escaped


def _escape_plateau(pair, budget: int):
    n = _total(pair)
    seen = {_key(pair)}
    queue = deque([pair])
    while queue and len(seen) < budget:
        cur = queue.popleft()
        for nxt in _pair_moves(*cur):
            t = _total(nxt)
            if t < n:
                return nxt
            if t == n and _key(nxt) not in seen:
                seen.add(_key(nxt))
                queue.append(nxt)
    return None


def is_base_pair(u: FreeWord, v: FreeWord) -> bool:
    if u.rank != 2 or v.rank != 2:
        raise ValueError("base recognition is only implemented in rank 2")
    a, b = abelianize(u), abelianize(v)
    if abs(a[0] * b[1] - a[1] * b[0]) != 1:
        return False
    x, y = nielsen_reduce(u, v)
    return len(x) == 1 and len(y) == 1 and abs(x.letters[0]) != abs(y.letters[0])


# Text syntax: "t1^2 t2^-1 t1"; the empty string is the identity.

_TOKEN = re.compile(r"^([a-zA-Z]+)(\d+)(?:\^(-?\d+))?$")


def parse_word(text: str, rank: int = 2, prefix: str = "t") -> FreeWord:
    letters: list[int] = []
    for tok in text.replace("*", " ").split():
        m = _TOKEN.match(tok)
        if not m or m.group(1) != prefix:
            raise ValueError(f"bad word token {tok!r}")
        g = int(m.group(2))
        e = int(m.group(3)) if m.group(3) is not None else 1
        if not 1 <= g <= rank:
            raise ValueError(f"generator {tok!r} out of range for rank {rank}")
        letters.extend([g if e > 0 else -g] * abs(e))
    return FreeWord(rank, tuple(letters))


def format_word(w: FreeWord, prefix: str = "t") -> str:
    parts = []
    for g, e in w.syllables():
        parts.append(f"{prefix}{g}" if e == 1 else f"{prefix}{g}^{e}")
    return " ".join(parts)
