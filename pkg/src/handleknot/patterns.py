"""Link patterns, handlebody patterns and the rigidity obstruction.

A link pattern is a pair (w1, w2) of words in F_2 = F(t1, t2) that normally
generates F_2.  A handlebody pattern adds a word w0 recording how the
isthmus runs between the two cut surfaces.  Normal generation itself is not
checked: only the abelian shadow of it (the exponent-sum matrix of
(w1, w2) is unimodular) is enforced.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freegroup import (FreeWord, abelianize, format_word, gen, identity, is_base_pair,
                        is_primitive, parse_word)

TRIVIAL = "Trivial"
NONTRIVIAL = "NonTrivial"
OBSTRUCTED = "Obstructed"
INCONCLUSIVE = "Inconclusive"


def _rank2(w: FreeWord) -> FreeWord:
    if w.rank == 2:
        return w
    if w.rank == 1:
        return FreeWord(2, w.letters)
    raise ValueError("pattern words live in F_2")


@dataclass(frozen=True)
class LinkPattern:
    w1: FreeWord
    w2: FreeWord

    def __post_init__(self):
        object.__setattr__(self, "w1", _rank2(self.w1))
        object.__setattr__(self, "w2", _rank2(self.w2))
        a, b = abelianize(self.w1), abelianize(self.w2)
        if abs(a[0] * b[1] - a[1] * b[0]) != 1:
            raise ValueError(f"({self.w1}, {self.w2}) does not project onto a base of Z^2")


@dataclass(frozen=True)
class HandlebodyPattern:
    w0: FreeWord
    link: LinkPattern

    @classmethod
    def of(cls, w0: FreeWord | None, w1: FreeWord, w2: FreeWord) -> "HandlebodyPattern":
        return cls(_rank2(w0) if w0 is not None else identity(2), LinkPattern(w1, w2))

    @property
    def w1(self) -> FreeWord:
        return self.link.w1

    @property
    def w2(self) -> FreeWord:
        return self.link.w2


@dataclass(frozen=True)
class PatternVerdict:
    tag: str
    evidence: str = ""

    def to_dict(self) -> dict:
        return {"tag": self.tag, "evidence": self.evidence}


def classify_link_pattern(p: LinkPattern) -> PatternVerdict:
    bad = [name for name, w in (("w1", p.w1), ("w2", p.w2)) if not is_primitive(w)]
    if bad:
        return PatternVerdict(NONTRIVIAL, f"{', '.join(bad)} not primitive")
    return PatternVerdict(TRIVIAL, "w1 and w2 are primitive")


def classify_handlebody_pattern(h: HandlebodyPattern) -> PatternVerdict:
    w2c = h.w2.conj(h.w0)
    if is_base_pair(h.w1, w2c):
        return PatternVerdict(TRIVIAL, f"(w1, w0 w2 w0^-1) = ({h.w1}, {w2c}) is a base")
    return PatternVerdict(NONTRIVIAL, f"(w1, w0 w2 w0^-1) = ({h.w1}, {w2c}) is not a base")


def isthmus_word_test(w0: FreeWord) -> bool:
    """True iff w0 reduces to t1^n t2^m (n or m may vanish)."""
    gens = [g for g, _ in _rank2(w0).syllables()]
    return gens in ([], [1], [2], [1, 2])


def _sandwich(w: FreeWord, g: int) -> bool:
    """w = g^k z g^-h with k, h >= 1 and z nonempty (so z involves the other generator)."""
    syl = w.syllables()
    return (len(syl) >= 3 and syl[0][0] == g and syl[0][1] >= 1
            and syl[-1][0] == g and syl[-1][1] <= -1)


def _pure(w: FreeWord, g: int) -> bool:
    return all(abs(a) == g for a in w.letters)


def rigid_obstruction(w1: FreeWord, w2: FreeWord) -> PatternVerdict:
    """Shape test showing no trivial link pattern lies in <w1, w2>.

    Looks for n with t1^n w1 t1^-n and t2^n w2 t2^-n both either sandwiched
    (t_i^k z t_i^-h, k, h >= 1) or pure powers of t_i, not both pure.  In
    that shape no product of the two words cancels across factors, so every
    primitive element of the subgroup is conjugate to w1 or w2.  Combined with
    a nontrivial pattern this rules out trivial patterns in the subgroup.
    """
    w1, w2 = _rank2(w1), _rank2(w2)
    try:
        verdict = classify_link_pattern(LinkPattern(w1, w2))
    except ValueError as exc:
        return PatternVerdict(INCONCLUSIVE, str(exc))
    if verdict.tag != NONTRIVIAL:
        return PatternVerdict(INCONCLUSIVE, "the pattern is trivial")
    t1, t2 = gen(1), gen(2)
    for n in range(len(w1) + len(w2) + 2):
        a, b = w1.conj(t1 ** n), w2.conj(t2 ** n)
        s1, s2 = _sandwich(a, 1), _sandwich(b, 2)
        if (s1 or s2) and (s1 or _pure(a, 1)) and (s2 or _pure(b, 2)):
            return PatternVerdict(OBSTRUCTED, f"n={n}: w1'={a}, w2'={b}; {verdict.evidence}")
    return PatternVerdict(INCONCLUSIVE, "no conjugation brings the words to sandwiched form")


def parse_pattern(text: str) -> HandlebodyPattern:
    words: dict[str, FreeWord] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition(":")
        key = key.strip()
        if not sep or key not in ("w0", "w1", "w2"):
            raise ValueError(f"line {lineno}: expected 'w0:', 'w1:' or 'w2:'")
        if key in words:
            raise ValueError(f"line {lineno}: duplicate {key}")
        try:
            words[key] = parse_word(val)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    for key in ("w1", "w2"):
        if key not in words:
            raise ValueError(f"missing '{key}:' line")
    return HandlebodyPattern.of(words.get("w0"), words["w1"], words["w2"])


def format_pattern(h: HandlebodyPattern) -> str:
    return f"w0: {format_word(h.w0)}\nw1: {format_word(h.w1)}\nw2: {format_word(h.w2)}\n"
