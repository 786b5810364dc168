"""Built-in W_13 scenario: kappa_{1,7,8} composed with the 13-cycle i -> i+1.

The radius check asks for an interval inside the rounding window of 1.50614,
[1.506135, 1.506145].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .lattice import pairing
from .nodal import LINE, TOWER
from .realizability import RealizabilityReport, analyze, harbourne_check
from .spectral import spectral_radius
from .weyl import WeylElement, compose, coxeter_element, cremona, permutation_element

WORKED_TEXT = "n=13 cremona=1,7,8 perm=cycle(1 2 3 4 5 6 7 8 9 10 11 12 13)"
SALEM = (1, -1, 0, -1, 0, -1, 1)


def element() -> WeylElement:
    return compose(cremona(13, (1, 7, 8)), permutation_element(13, list(range(2, 14)) + [1]))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def run_checks(report: RealizabilityReport = None) -> List[Check]:
    omega = element()
    if report is None:
        report = analyze(omega)
    checks: List[Check] = []

    def check(name: str, ok: bool, detail: str) -> None:
        checks.append(Check(name, bool(ok), detail))

    check("salem factor", report.split.salem_part == SALEM, str(list(report.split.salem_part)))
    iv = report.radius.interval
    check("spectral radius",
          iv is not None and iv.width <= Fraction(1, 10**5)
          and Fraction("1.506135") <= iv.lo and iv.hi <= Fraction("1.506145"),
          report.radius.decimal())
    od = report.orbits
    check("orbit data", od is not None and sorted(od.lengths.values()) == [1, 6, 6]
          and od.sigma_kind() == "cyclic", str(od.to_json() if od else None))
    fe = report.feasibility
    check("three lines infeasible", fe is not None and not fe.three_lines.feasible,
          fe.three_lines.reason if fe else "")
    check("conic and tangent infeasible", fe is not None and not fe.conic_tangent.feasible,
          fe.conic_tangent.reason if fe else "")
    nodal = report.nodal
    towers = [r.root for r in nodal if r.kind == TOWER] if nodal else []
    lines = [r.root for r in nodal if r.kind == LINE] if nodal else []
    orth = all(pairing(a, b) == 0 for i, a in enumerate(towers) for b in towers[i + 1:])
    check("six nodal roots", nodal is not None and len(nodal) == 6 and len(towers) == 5
          and len(lines) == 1 and orth and all(pairing(lines[0], t) == 0 for t in towers),
          f"{len(towers)} tower, {len(lines)} line")
    v = report.verdict
    check("harbourne violation", v is not None and not v.realizable and len(v.violations) == 1,
          "; ".join(str(x.root) for x in v.violations) if v else "")
    c = report.correction
    ok = c is not None and len(c.reflections) == 1
    if ok:
        ok = harbourne_check(c.corrected, nodal).realizable
        ok = ok and spectral_radius(c.corrected).split.salem_part == SALEM
    check("single-reflection correction", ok, ", ".join(str(r) for r in c.reflections) if c else "")
    cox = spectral_radius(coxeter_element(13)).interval
    check("above the Coxeter radius", iv is not None and cox is not None and iv.strictly_above(cox),
          f"{report.radius.decimal()} > {cox.decimal() if cox else '?'}")
    return checks
