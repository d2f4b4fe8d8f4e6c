"""Exact obstructions to unknotting genus-2 spatial handlebodies.

Three families of invariants are computed from a handcuff spine diagram or a
presentation of the complement group: dihedral coloring polynomials Phi_p,
the second elementary ideal of the Alexander module, and free-group pattern
tests.  ``obstructions`` turns them into knotting-level verdicts.
"""

from .diagram import SpineDiagram, parse_diagram, format_diagram, wirtinger, delete_isthmus
from .fixtures import build_family, build_tangle, kinoshita_presentation, lambert_diagram
from .freegroup import FreeWord, parse_word
from .ideals import alexander_report
from .obstructions import KnottingReport, combine_report
from .patterns import HandlebodyPattern, LinkPattern
from .presentation import GroupPresentation, parse_presentation
from .quandle import PhiPolynomial, phi_p

__all__ = [
    "SpineDiagram", "parse_diagram", "format_diagram", "wirtinger", "delete_isthmus",
    "build_family", "build_tangle", "kinoshita_presentation", "lambert_diagram",
    "FreeWord", "parse_word", "alexander_report", "KnottingReport", "combine_report",
    "HandlebodyPattern", "LinkPattern", "GroupPresentation", "parse_presentation",
    "PhiPolynomial", "phi_p",
]
