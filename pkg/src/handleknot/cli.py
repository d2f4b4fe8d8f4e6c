"""Command line front end.

    python3 -m handleknot color DIAGRAM [--primes 3,5,7] [--quandle SPEC]
    python3 -m handleknot alexander DIAGRAM_OR_PRESENTATION
    python3 -m handleknot pattern PATTERN
    python3 -m handleknot report DIAGRAM_OR_PRESENTATION [--pattern PATTERN]
    python3 -m handleknot fixtures NAME [--param N] | --list

Exit status: 0 on success, 1 on bad input, 2 when an internal invariant fails.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from .diagram import SpineDiagram, format_diagram, parse_diagram, wirtinger
from .fixtures import CATALOG, build_fixture
from .groebner import is_prime
from .ideals import alexander_report
from .obstructions import (LEVELS, alexander_tests, combine_report, dumps, pattern_tests,
                           quandle_shape_tests)
from .patterns import (HandlebodyPattern, classify_handlebody_pattern,
                       classify_link_pattern, format_pattern, isthmus_word_test, parse_pattern,
                       rigid_obstruction)
from .presentation import (AbelianizationError, GroupPresentation, format_presentation,
                           parse_presentation)
from .quandle import Z2_CYCLES, count_colorings, make_quandle, phi_p


class InputError(Exception):
    pass


def _primes(text: str) -> list[int]:
    try:
        ps = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None
    bad = [p for p in ps if p == 2 or not is_prime(p)]
    if bad or not ps:
        raise argparse.ArgumentTypeError(f"not odd primes: {bad or text!r}")
    return ps


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _parse_with(path: str, parser):
    text = _read(path)
    try:
        return parser(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _is_presentation(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return line.startswith("gens")
    return False


def load_input(path: str) -> SpineDiagram | GroupPresentation:
    text = _read(path)
    parser = parse_presentation if _is_presentation(text) else parse_diagram
    try:
        return parser(text)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _phis(d: SpineDiagram, primes: list[int]) -> dict[int, object]:
    if d.kind != "handcuff":
        raise InputError(f"coloring polynomials need a handcuff diagram, got kind {d.kind}")
    with ThreadPoolExecutor() as pool:
        values = list(pool.map(lambda p: phi_p(d, p), primes))
    return dict(zip(primes, values))


def _group(obj) -> GroupPresentation:
    if isinstance(obj, GroupPresentation):
        return obj
    if obj.kind != "handcuff":
        raise InputError(f"expected a handcuff diagram or a presentation, got kind {obj.kind}")
    return wirtinger(obj)


def _alexander(obj):
    try:
        return alexander_report(_group(obj))
    except AbelianizationError as exc:
        raise InputError(str(exc)) from None


def cmd_color(args) -> dict:
    d = load_input(args.input)
    if not isinstance(d, SpineDiagram):
        raise InputError(f"{args.input}: expected a diagram")
    if args.quandle:
        return _quandle_counts(d, args.quandle)
    return {"phi": {str(p): str(v) for p, v in sorted(_phis(d, args.primes).items())}}


def _quandle_counts(d: SpineDiagram, spec: str) -> dict:
    # other involutory quandles go through the guarded exhaustive search
    if d.kind not in ("handcuff", "link"):
        raise InputError(f"coloring counts need a handcuff or link diagram, got kind {d.kind}")
    try:
        Q = make_quandle(spec)
        counts = {f"{z1},{z2}": count_colorings(d, Q, (z1, z2)) for z1, z2 in Z2_CYCLES}
    except ValueError as exc:
        raise InputError(f"quandle {spec}: {exc}") from None
    return {"quandle": spec, "counts": counts}


def cmd_alexander(args) -> dict:
    return _alexander(load_input(args.input)).to_dict()


def _pattern_verdicts(h: HandlebodyPattern) -> dict:
    return {
        "link": classify_link_pattern(h.link).to_dict(),
        "handlebody": classify_handlebody_pattern(h).to_dict(),
        "isthmus_word": isthmus_word_test(h.w0),
        "rigid": rigid_obstruction(h.w1, h.w2).to_dict(),
    }


def cmd_pattern(args) -> dict:
    return _pattern_verdicts(_parse_with(args.input, parse_pattern))


def cmd_report(args) -> dict:
    obj = load_input(args.input)
    evidence, warnings, inv = [], [], {}
    if isinstance(obj, SpineDiagram):
        phis = _phis(obj, args.primes)
        inv["phi"] = {str(p): str(v) for p, v in sorted(phis.items())}
        evidence.append(quandle_shape_tests(sorted(phis.items())))
    rep = _alexander(obj)
    inv["alexander"] = rep.to_dict()
    ev, w = alexander_tests(rep)
    evidence.append(ev)
    warnings += w
    if args.pattern:
        h = _parse_with(args.pattern, parse_pattern)
        inv["pattern"] = _pattern_verdicts(h)
        evidence.append(pattern_tests(h))
        warnings.append("pattern evidence is conditional on realization")
    return combine_report(*evidence, warnings=warnings, invariants=inv).to_dict()


def cmd_fixtures(args) -> dict | str:
    if args.list or not args.name:
        return {"fixtures": {name: default for name, (_, default) in CATALOG.items()}}
    try:
        obj = build_fixture(args.name, args.param)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    label = args.name if args.param is None else f"{args.name}({args.param})"
    if isinstance(obj, SpineDiagram):
        return format_diagram(obj, comment=label)
    if isinstance(obj, GroupPresentation):
        return f"# {label}\n" + format_presentation(obj)
    return f"# {label}\n" + format_pattern(obj)


def _text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(f"{pad}- {x}" if not isinstance(x, (dict, list))
                         else f"{pad}-\n{_text(x, indent + 1)}" for x in doc)
    return f"{pad}{doc}"


def _report_text(doc: dict) -> str:
    lines = []
    for lv in LEVELS:
        chain = doc["derivations"].get(lv)
        how = "" if not chain else "  (" + " -> ".join(chain) + ")"
        lines.append(f"{lv}: {doc['verdicts'][lv]}{how}")
    lines.append("evidence:")
    for e in doc["evidence"]:
        cond = " [conditional on realization]" if e["conditional"] else ""
        lines.append(f"  {e['level']} from {e['invariant']} = {e['value']} ({e['citation']}){cond}")
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    lines.append("invariants:")
    lines.append(_text(doc["invariants"], 1))
    return "\n".join(lines) + "\n"


COMMANDS = {"color": cmd_color, "alexander": cmd_alexander, "pattern": cmd_pattern,
            "report": cmd_report, "fixtures": cmd_fixtures}


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="handleknot", description="Knotting obstructions for genus-2 handlebodies.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--primes", type=_primes, default=[3, 5, 7], help="comma separated odd primes")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("color", "alexander", "pattern", "report"):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input")
        if name == "color":
            sp.add_argument("--quandle", help="count colorings by this quandle, e.g. dihedral:5")
        if name == "report":
            sp.add_argument("--pattern", help="pattern file assumed realized by the input")
    sp = sub.add_parser("fixtures", parents=[common])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--param", type=int)
    sp.add_argument("--list", action="store_true")
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        doc = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except AssertionError as exc:
        print(f"internal invariant failed: {exc}", file=stderr)
        return 2
    if isinstance(doc, str):
        out = doc
    elif args.format == "json":
        out = dumps(doc)
    elif args.command == "report":
        out = _report_text(doc)
    else:
        out = _text(doc) + "\n"
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            print(f"error: {args.out}: {exc.strerror}", file=stderr)
            return 1
    else:
        stdout.write(out)
    return 0


def main() -> None:
    sys.exit(run())
