"""JSON and text rendering of analysis reports."""

from __future__ import annotations

import json
from typing import Dict, List, Optional

from . import __version__
from . import polynomials as P
from .realizability import RealizabilityReport


def report_to_json(report: RealizabilityReport, input_echo: Optional[Dict] = None) -> Dict:
    split = report.split
    doc: Dict = {
        "tool": {"name": "weylreal", "version": __version__},
        "n": report.n,
        "input": input_echo if input_echo is not None else report.omega.to_json(),
        "applicable": report.applicable,
        "char_poly": list(report.radius.charpoly),
        "salem_factor": list(split.salem_part),
        "cyclotomic_part": list(split.cyclotomic_part),
        "cyclotomic_factors": [{"order": k, "multiplicity": m} for k, m in split.factors],
        "split_verified": split.verified,
        "spectral_radius": report.radius.to_json(),
        "essential_necessary": report.necessary.to_json(),
        "eigenvector": None,
        "base_points": None,
        "nodal_roots": None,
        "components": None,
        "nodal_span_rank": None,
        "harbourne": None,
        "correction": None,
        "decomposition": report.decomposition.to_json() if report.decomposition else None,
        "orbit_data": report.orbits.to_json() if report.orbits else None,
        "curve_feasibility": report.feasibility.to_json() if report.feasibility else None,
        "notes": list(report.notes),
    }
    if report.eigen is not None:
        doc["eigenvector"] = {
            "field": report.eigen.field.to_json(),
            "entries": report.eigen.vector.to_json(),
            "approx": [float(x) for x in report.eigen.vector],
            "coincidences": report.coincidences(),
        }
    if report.config is not None:
        doc["base_points"] = report.config.to_json()
    if report.nodal is not None:
        nodal = report.nodal
        doc["nodal_roots"] = nodal.to_json()
        doc["components"] = [
            {"id": ci, "dynkin": c.dynkin, "members": list(c.members), "size": c.size}
            for ci, c in enumerate(nodal.components)
        ]
        rank = nodal.span_rank()
        doc["nodal_span_rank"] = {"rank": rank, "finite_automorphism_group_criterion": rank == report.n - 1}
    if report.verdict is not None:
        doc["harbourne"] = report.verdict.to_json()
    if report.correction is not None:
        doc["correction"] = report.correction.to_json()
    return doc


def dumps(doc: Dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False)


def render_text(report: RealizabilityReport, input_text: Optional[str] = None) -> str:
    lines: List[str] = []
    add = lines.append
    add(f"element of W_{report.n}" + (f": {input_text}" if input_text else ""))
    add(f"characteristic polynomial: {P.to_string(report.radius.charpoly)}")
    split = report.split
    add(f"Salem factor: {P.to_string(split.salem_part)}")
    cyc = ", ".join(f"Phi_{k}" + (f"^{m}" if m > 1 else "") for k, m in split.factors) or "none"
    add(f"cyclotomic factors: {cyc}" + ("" if split.verified else "  (split NOT verified)"))
    rad = report.radius.to_json()
    add(f"spectral radius: {rad['decimal']}  interval [{rad['interval'][0]}, {rad['interval'][1]}]")
    nec = report.necessary
    add("essential (necessary check): " + ("passes" if nec.passes else f"fails at e{nec.witness}"))
    if not report.applicable:
        add("realizability: not applicable")
    if report.eigen is not None:
        approx = ", ".join(f"{float(x):.6f}" for x in report.eigen.vector)
        add(f"leading eigenvector (approx): [{approx}]")
    if report.config is not None:
        heights = report.config.heights()
        add(f"base points: {len(heights)}  heights {heights}")
    if report.nodal is not None:
        add(f"nodal roots: {len(report.nodal)}")
        for k, r in enumerate(report.nodal.roots):
            comp = report.nodal.components[report.nodal.component_of(k)]
            add(f"  {r.kind:6s} {r.root}  [{comp.dynkin}]")
        add(f"nodal span rank: {report.nodal.span_rank()}")
    if report.verdict is not None:
        add(f"Harbourne verdict: {report.verdict.status}")
        for v in report.verdict.violations:
            add(f"  omega^-1({v.root}) = {v.image}")
    if report.correction is not None and report.correction.applied:
        refl = ", ".join(str(r) for r in report.correction.reflections)
        right = ", ".join(str(r) for r in report.correction.right_reflections)
        add(f"correction: s o omega with s = reflections through [{refl}]")
        add(f"  equivalently omega o s' with s' through [{right}]")
    if report.orbits is not None:
        od = report.orbits
        lengths = ", ".join(f"n_{l}={od.lengths[l]}" for l in od.triple)
        sigma = ", ".join(f"{l}->{od.sigma[l]}" for l in od.triple)
        add(f"orbit data: {lengths}; sigma {sigma} ({od.sigma_kind()})")
    if report.feasibility is not None:
        for name in ("three_lines", "conic_tangent", "cuspidal_cubic"):
            f = getattr(report.feasibility, name)
            verdict = f"Feasible (case {f.case})" if f.feasible else "Infeasible"
            add(f"  {name}: {verdict}: {f.reason}")
    for note in report.notes:
        add(f"note: {note}")
    return "\n".join(lines)
