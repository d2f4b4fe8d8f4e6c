"""Knotting-level verdicts from computed invariants.

Each test turns an invariant into evidence that the handlebody is knotted
at some level.  ``combine_report`` closes the evidence under the known
implications between levels:

    (k+1)_S => (k)_S,   (k+1)_L => (k)_L,   (k)_L => (k)_S,   (4)_L <=> (4)_S.

Verdicts are one-sided: a level is either Knotted or Unknown.  Nothing
here ever certifies that a handlebody is unknotted at some level.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .freegroup import gen
from .ideals import AlexanderReport
from .patterns import (NONTRIVIAL, OBSTRUCTED, HandlebodyPattern, classify_handlebody_pattern,
                       isthmus_word_test, rigid_obstruction)
from .quandle import PhiPolynomial

LEVELS = ("(1)_S", "(2)_S", "(3)_S", "(4)_S", "(1)_L", "(2)_L", "(3)_L", "(4)_L")
KNOTTED = "Knotted"
UNKNOWN = "Unknown"


def _edges() -> dict[str, list[str]]:
    out: dict[str, list[str]] = {lv: [] for lv in LEVELS}
    for k in range(1, 4):
        out[f"({k + 1})_S"].append(f"({k})_S")
        out[f"({k + 1})_L"].append(f"({k})_L")
    for k in range(1, 5):
        out[f"({k})_L"].append(f"({k})_S")
    out["(4)_S"].append("(4)_L")
    return out


IMPLIES = _edges()


@dataclass(frozen=True)
class Evidence:
    level: str
    invariant: str
    value: str
    citation: str
    conditional: bool = False

    def __post_init__(self):
        if self.level not in LEVELS:
            raise ValueError(f"unknown level {self.level!r}")

    def to_dict(self) -> dict:
        return {"level": self.level, "invariant": self.invariant, "value": self.value,
                "citation": self.citation, "conditional": self.conditional}

    @classmethod
    def from_dict(cls, d: dict) -> "Evidence":
        return cls(d["level"], d["invariant"], d["value"], d["citation"], d.get("conditional", False))

    def sort_key(self):
        return (LEVELS.index(self.level), self.invariant, self.value, self.citation)


@dataclass
class KnottingReport:
    verdicts: dict[str, str]
    evidence: list[Evidence]
    derivations: dict[str, list[str]]  # level -> chain of levels starting at evidence
    warnings: list[str] = field(default_factory=list)
    invariants: dict = field(default_factory=dict)

    def knotted(self) -> set[str]:
        return {lv for lv, v in self.verdicts.items() if v == KNOTTED}

    def to_dict(self) -> dict:
        return {
            "verdicts": {lv: self.verdicts[lv] for lv in LEVELS},
            "derivations": {lv: self.derivations[lv] for lv in LEVELS if lv in self.derivations},
            "evidence": [e.to_dict() for e in self.evidence],
            "warnings": list(self.warnings),
            "invariants": self.invariants,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "KnottingReport":
        return cls(dict(d["verdicts"]), [Evidence.from_dict(e) for e in d["evidence"]],
                   {k: list(v) for k, v in d.get("derivations", {}).items()},
                   list(d.get("warnings", [])), d.get("invariants", {}))


def dumps(obj) -> str:
    """Canonical JSON text: re-serializing parsed output reproduces it exactly."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# tests

def _realizes_2s(exps: tuple[int, ...]) -> bool:
    e = sorted(exps)
    return e[0] == 0 and e[1] + e[2] == e[3]


def _realizes_2l(exps: tuple[int, ...]) -> bool:
    e = sorted(exps)
    return e[0] == 0 and e[3] - (e[1] + e[2]) in (0, 1)


def quandle_shape_tests(phis) -> list[Evidence]:
    """Evidence from Phi_p of a handcuff spine, for each (p, Phi_p) given."""
    out = []
    for p, phi in phis:
        if not isinstance(phi, PhiPolynomial):
            phi = PhiPolynomial.parse(str(phi))
        if sum(phi.coefficients().values()) != 4 or min(phi.exponents) != 0:
            raise AssertionError(f"Phi_{p} = {phi} does not have the shape of a Phi polynomial")
        name = f"Phi_{p}"
        if not _realizes_2s(phi.exponents):
            out.append(Evidence("(2)_S", name, str(phi), "1-k-obs"))
        if not _realizes_2l(phi.exponents):
            out.append(Evidence("(2)_L", name, str(phi), "2-K-obs"))
        if phi.exponents not in ((0, 0, 0, 0), (0, 0, 0, 1)):
            out.append(Evidence("(1)_L", name, str(phi), "L2rem"))
    return out


def alexander_tests(r: AlexanderReport) -> tuple[list[Evidence], list[str]]:
    """Evidence and warnings from the second elementary ideal of the complement."""
    warnings = list(r.warnings)
    if not (r.E0_is_zero and r.E1_is_zero) or not r.unitary:
        if not warnings:
            warnings.append("input is not a genus-2 handlebody complement group")
        return [], warnings
    out = []
    if r.principal.verdict == "No":
        out.append(Evidence("(4)_L", "E2 principal", f"No({r.principal.witness})",
                            "main-ob(4)+corank1"))
    elif r.principal.verdict == "Yes" and r.symmetric == "No":
        out.append(Evidence("(3)_S", "E2 symmetric", f"No({r.principal.generator})",
                            "main-ob(5)+ex<=>in"))
    return out, warnings


def pattern_tests(h: HandlebodyPattern) -> list[Evidence]:
    """Evidence from a pattern assumed to be realized by the handlebody under test."""
    out = []
    v = classify_handlebody_pattern(h)
    if v.tag == NONTRIVIAL:
        out.append(Evidence("(3)_S", "handlebody pattern", v.evidence, "jaco:gen(1)+ex<=>in", True))
    if (h.w1, h.w2) == (gen(1), gen(2)) and not isthmus_word_test(h.w0):
        out.append(Evidence("(3)_S", "isthmus word", str(h.w0), "criterio2(2)", True))
    r = rigid_obstruction(h.w1, h.w2)
    if r.tag == OBSTRUCTED:
        out.append(Evidence("(3)_L", "rigid pattern", r.evidence, "nuovaprop", True))
    return out


def _chain(start: set[str], target: str) -> list[str]:
    prev: dict[str, str | None] = {s: None for s in sorted(start, key=LEVELS.index)}
    queue = deque(prev)
    while queue:
        cur = queue.popleft()
        if cur == target:
            path = [cur]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for nxt in IMPLIES[cur]:
            if nxt not in prev:
                prev[nxt] = cur
                queue.append(nxt)
    return []


def closure(levels) -> set[str]:
    seen = set(levels)
    stack = list(seen)
    while stack:
        for nxt in IMPLIES[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return seen


def combine_report(*evidence_lists, warnings=(), invariants=None) -> KnottingReport:
    evidence = sorted({e for lst in evidence_lists for e in lst}, key=Evidence.sort_key)
    direct = {e.level for e in evidence}
    knotted = closure(direct)
    verdicts = {lv: KNOTTED if lv in knotted else UNKNOWN for lv in LEVELS}
    derivations = {lv: _chain(direct, lv) for lv in LEVELS if lv in knotted}
    return KnottingReport(verdicts, evidence, derivations, sorted(set(warnings)), invariants or {})
