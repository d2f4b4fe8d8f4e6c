"""Print Phi_p and the Alexander verdicts for every spine fixture.

    python3 scripts/reproduce_fixtures.py [--primes 3,5,7] [--params 3,5] [--q 1,2,3]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from handleknot.diagram import wirtinger
from handleknot.fixtures import build_family, kinoshita_presentation, lambert_diagram
from handleknot.ideals import alexander_report
from handleknot.obstructions import alexander_tests, combine_report, quandle_shape_tests
from handleknot.quandle import phi_p


@dataclass
class TableConfig:
    primes: tuple[int, ...] = (3, 5, 7)
    params: tuple[int, ...] = (3, 5)  # odd primes for Gamma1..Gamma3 and Lambert
    gamma4_q: tuple[int, ...] = (1, 2, 3)
    families: tuple[str, ...] = field(default=("Gamma1", "Gamma2", "Gamma3"))


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def rows(cfg: TableConfig):
    spines = [(f"{f}({p})", build_family(f, p)) for f in cfg.families for p in cfg.params]
    spines += [(f"Gamma4({q})", build_family("Gamma4", q)) for q in cfg.gamma4_q]
    spines += [(f"Lambert({p})", lambert_diagram(p)) for p in cfg.params]
    for label, d in spines:
        t0 = time.perf_counter()
        phis = [(p, phi_p(d, p)) for p in cfg.primes]
        r = alexander_report(wirtinger(d))
        ev, w = alexander_tests(r)
        rep = combine_report(ev, quandle_shape_tests(phis), warnings=w)
        yield label, len(d.arcs), phis, r, rep, time.perf_counter() - t0
    r = alexander_report(kinoshita_presentation())
    ev, w = alexander_tests(r)
    yield "Kinoshita", None, [], r, combine_report(ev, warnings=w), 0.0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=_ints, default=TableConfig.primes)
    ap.add_argument("--params", type=_ints, default=TableConfig.params)
    ap.add_argument("--q", type=_ints, default=TableConfig.gamma4_q)
    a = ap.parse_args()
    cfg = TableConfig(primes=a.primes, params=a.params, gamma4_q=a.q)
    for label, arcs, phis, r, rep, secs in rows(cfg):
        phi_txt = "  ".join(f"Phi_{p}={v}" for p, v in phis)
        pr = r.principal
        alex = f"E2 principal={pr.verdict}" + (f"({pr.witness})" if pr.witness else "")
        alex += f" symmetric={r.symmetric}"
        knotted = ",".join(sorted(rep.knotted())) or "-"
        size = f"{arcs} arcs" if arcs is not None else "presentation"
        print(f"{label:12s} {size:>12s}  {phi_txt}")
        print(f"{'':12s} {alex}; knotted: {knotted}  [{secs:.2f}s]")


if __name__ == "__main__":
    main()
