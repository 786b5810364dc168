"""Harbourne positivity, correction by nodal reflections and the analysis pipeline."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import polynomials as P
from .errors import (
    InconsistentInputError,
    InternalVerificationError,
    NotQuadraticEssentialError,
    WeylError,
)
from .lattice import LatticeVector, Root, Sign, canonical_vector, is_positive_root, reflect, root_sign
from .nodal import MarkedCubicConfig, NodalSet, marked_cubic_config, nodal_set
from .numberfield import FieldElement, FieldVector, NumberField, apply_matrix, field_pairing
from .quadratic import (
    CurveFeasibility,
    OrbitData,
    QuadraticDecomposition,
    decompose_quadratic,
    invariant_curve_feasibility,
    orbit_data,
)
from .spectral import LeadingEigen, SalemSplit, SpectralRadius, cyclotomic_split, leading_eigenvector, spectral_radius
from .weyl import (
    NecessaryCheck,
    WeylElement,
    char_poly,
    compose,
    essential_necessary_check,
    identity,
    inverse,
    reflection,
)

NO_NODAL_ROOTS = "NoNodalRoots"
CHECKED = "Checked"


@dataclass(frozen=True)
class Violation:
    root: Root  # nodal root alpha
    image: LatticeVector  # omega^-1(alpha), a negative root

    def to_json(self) -> Dict:
        return {"root": self.root.to_json(), "inverse_image": self.image.to_json(),
                "text": f"omega^-1({self.root}) = {self.image}"}


@dataclass(frozen=True)
class RealizabilityVerdict:
    violations: Tuple[Violation, ...]
    fast_path: str
    forward_images: Tuple[Tuple[Root, LatticeVector], ...] = ()

    @property
    def realizable(self) -> bool:
        return not self.violations

    @property
    def status(self) -> str:
        return "Realizable" if self.realizable else "NotRealizable"

    def to_json(self) -> Dict:
        return {
            "realizable": self.realizable,
            "status": self.status,
            "fast_path": self.fast_path,
            "violations": [v.to_json() for v in self.violations],
            "forward_images": [
                {"root": a.to_json(), "image": b.to_json(), "sign": root_sign(b).name}
                for a, b in self.forward_images
            ],
        }


def harbourne_check(
    omega: WeylElement, nodal: NodalSet, v: Optional[FieldVector] = None
) -> RealizabilityVerdict:
    """omega is compatible with the marked blowup iff omega^-1 keeps every nodal root positive.

    With ``v`` given, every image is also checked to stay orthogonal to v.
    """
    if not len(nodal):
        return RealizabilityVerdict((), NO_NODAL_ROOTS)
    inv = inverse(omega)
    violations = []
    forward = []
    for r in nodal:
        back = inv(r.root)
        fwd = omega(r.root)
        if v is not None and not (field_pairing(v, back).is_zero() and field_pairing(v, fwd).is_zero()):
            raise InconsistentInputError(
                f"omega does not preserve v-orthogonality of the nodal root {r.root}"
            )
        if root_sign(back) is Sign.NEGATIVE:
            violations.append(Violation(r.root, back))
        forward.append((r.root, fwd))
    return RealizabilityVerdict(tuple(violations), CHECKED, tuple(forward))


# -- correction ---------------------------------------------------------------


def subsystem_positive_roots(simple: Sequence[LatticeVector]) -> List[LatticeVector]:
    """Positive roots of the finite root subsystem spanned by pairwise-linked nodal roots."""
    seen = {tuple(a.coords) for a in simple}
    frontier = list(simple)
    out = list(simple)
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                y = reflect(a, x)
                if y.coords not in seen and is_positive_root(y):
                    seen.add(y.coords)
                    out.append(y)
                    nxt.append(y)
        frontier = nxt
    return out


@dataclass(frozen=True)
class CorrectionResult:
    reflections: Tuple[Root, ...]
    corrected: WeylElement
    steps: int
    right_reflections: Tuple[LatticeVector, ...] = ()
    bound: int = 0

    @property
    def applied(self) -> bool:
        return bool(self.reflections)

    def to_json(self) -> Dict:
        return {
            "applied": self.applied,
            "steps": self.steps,
            "reflections": [r.to_json() for r in self.reflections],
            "reflections_text": [str(r) for r in self.reflections],
            "right_reflections": [r.to_json() for r in self.right_reflections],
            "corrected": {"n": self.corrected.n, "matrix": [list(r) for r in self.corrected.matrix]},
        }


def _inverse_count(u: WeylElement, positives: Sequence[LatticeVector]) -> int:
    return sum(1 for b in positives if root_sign(u(b)) is Sign.NEGATIVE)


def correct(
    omega: WeylElement,
    nodal: NodalSet,
    field: Optional[NumberField] = None,
    v: Optional[FieldVector] = None,
) -> CorrectionResult:
    """Left-compose omega with nodal reflections until omega^-1 keeps every nodal root positive.

    Each step takes the first nodal root (component order, then coordinates)
    sent to a negative root by the current inverse and reflects through it.
    Reflection s_a permutes the positive roots of the nodal subsystem other
    than a, so every step removes exactly one negative image.
    """
    order: List[Root] = []
    for comp in nodal.components:
        order.extend(sorted((nodal.roots[k].root for k in comp.members), key=lambda r: r.coords))
    positives = subsystem_positive_roots(order)
    bound = len(positives)
    current = omega
    applied: List[Root] = []
    count = _inverse_count(inverse(current), positives)
    while True:
        u = inverse(current)
        bad = next((a for a in order if root_sign(u(a)) is Sign.NEGATIVE), None)
        if bad is None:
            break
        if len(applied) >= bound:
            raise InternalVerificationError(f"correction exceeded the bound of {bound} steps")
        current = compose(reflection(omega.n, bad), current)
        applied.append(bad)
        new_count = _inverse_count(inverse(current), positives)
        if new_count != count - 1:
            raise InternalVerificationError("descent step did not remove exactly one negative image")
        count = new_count
    # s o omega = omega o (omega^-1 s omega): the same correction as right factors
    inv = inverse(omega)
    right = []
    for a in applied:
        b = inv(a)
        right.append(b if is_positive_root(b) else -b)
    result = CorrectionResult(tuple(applied), current, len(applied), tuple(right), bound)
    if v is not None:
        verify_correction(omega, nodal, result, v)
    return result


def verify_correction(omega: WeylElement, nodal: NodalSet, result: CorrectionResult, v: FieldVector) -> None:
    """Postconditions (a)-(d); raises InternalVerificationError on failure."""
    nodal_roots = set(nodal.vectors())
    s = identity(omega.n)
    for a in result.reflections:
        if a not in nodal_roots:
            raise InternalVerificationError(f"{a} is not a nodal root")
        s = compose(reflection(omega.n, a), s)
    if compose(s, omega).matrix != result.corrected.matrix:
        raise InternalVerificationError("corrected element is not s o omega")
    lam = v.field.generator
    if apply_matrix(result.corrected.matrix, v) != v.scaled(lam):
        raise InternalVerificationError("corrected element does not satisfy omega v = lambda v")
    if not harbourne_check(result.corrected, nodal).realizable:
        raise InternalVerificationError("corrected element still violates positivity")
    before = cyclotomic_split(char_poly(omega)).salem_part
    after = cyclotomic_split(char_poly(result.corrected)).salem_part
    if before != after:
        raise InternalVerificationError("correction changed the Salem factor")


# -- W_n^v membership -----------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    member: bool
    scale: Optional[FieldElement] = None
    shift: Optional[FieldElement] = None

    def __bool__(self) -> bool:
        return self.member


def w_n_v_membership(omega: WeylElement, v: FieldVector) -> Membership:
    """Is omega(v) = a v + mu kappa for field scalars a, mu?"""
    n = omega.n
    w = apply_matrix(omega.matrix, v)
    kappa = canonical_vector(n).coords
    F = v.field
    # two coordinates (p, q) give a 2x2 system in (a, mu)
    for p in range(n + 1):
        for q in range(p + 1, n + 1):
            det = v[p] * kappa[q] - v[q] * kappa[p]
            if det.is_zero():
                continue
            a = (w[p] * kappa[q] - w[q] * kappa[p]) / det
            mu = (v[p] * w[q] - v[q] * w[p]) / det
            ok = all(w[i] == v[i] * a + F(kappa[i]) * mu for i in range(n + 1))
            return Membership(ok, a if ok else None, mu if ok else None)
    # v is a multiple of kappa
    return Membership(False)


# -- the analysis pipeline --------------------------------------------------------


@contextmanager
def stage(name: str):
    try:
        yield
    except WeylError as exc:
        raise type(exc)(f"[{name}] {exc}") from exc


@dataclass
class RealizabilityReport:
    omega: WeylElement
    radius: SpectralRadius
    necessary: NecessaryCheck
    applicable: bool
    eigen: Optional[LeadingEigen] = None
    config: Optional[MarkedCubicConfig] = None
    nodal: Optional[NodalSet] = None
    verdict: Optional[RealizabilityVerdict] = None
    correction: Optional[CorrectionResult] = None
    decomposition: Optional[QuadraticDecomposition] = None
    orbits: Optional[OrbitData] = None
    feasibility: Optional[CurveFeasibility] = None
    notes: List[str] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.omega.n

    @property
    def split(self) -> SalemSplit:
        return self.radius.split

    @property
    def nodal_span_rank(self) -> Optional[int]:
        return None if self.nodal is None else self.nodal.span_rank()

    def coincidences(self) -> List[List[int]]:
        if self.config is None:
            return []
        return [list(b.members) for b in self.config.base_points if b.height > 1]


def analyze(omega: WeylElement, max_order: Optional[int] = None) -> RealizabilityReport:
    notes: List[str] = []
    with stage("spectral"):
        radius = spectral_radius(omega, max_order)
    with stage("essential"):
        necessary = essential_necessary_check(omega)
    with stage("quadratic"):
        dec = decompose_quadratic(omega)
    if radius.is_one:
        notes.append("spectral radius is 1: the realizability pipeline needs lambda > 1")
        report = RealizabilityReport(omega, radius, necessary, False, notes=notes)
        _attach_orbits(report, dec, None)
        return report
    if not radius.split.verified:
        notes.extend(radius.split.notes)
        notes.append("Salem split not verified: eigenvector stage skipped")
        report = RealizabilityReport(omega, radius, necessary, False, notes=notes)
        _attach_orbits(report, dec, None)
        return report
    with stage("eigenvector"):
        eigen = leading_eigenvector(omega, radius)
    v = eigen.vector
    with stage("nodal"):
        config = marked_cubic_config(eigen.field, v)
        nodal = nodal_set(config, v)
    if necessary.passes and len(config.base_points) < 3:
        notes.append(f"only {len(config.base_points)} base points for an element passing the essential check")
    with stage("harbourne"):
        verdict = harbourne_check(omega, nodal, v)
    if verdict.fast_path == NO_NODAL_ROOTS:
        notes.append("no nodal roots: every element is realizable on this marked blowup")
    with stage("correction"):
        if verdict.realizable:
            corr = CorrectionResult((), omega, 0)
        else:
            corr = correct(omega, nodal, eigen.field, v)
            notes.append(
                "correction s o omega equals omega o s' with s' the product of reflections "
                "through right_reflections"
            )
    report = RealizabilityReport(omega, radius, necessary, True, eigen, config, nodal, verdict, corr, notes=notes)
    coinc = report.coincidences()
    if coinc:
        notes.append("eigenvector coincidences (equal exceptional entries): "
                     + ", ".join("=".join(f"v{i}" for i in c) for c in coinc))
    _attach_orbits(report, dec, verdict)
    return report


def _attach_orbits(report: RealizabilityReport, dec: Optional[QuadraticDecomposition], verdict) -> None:
    if dec is None:
        return
    report.decomposition = dec
    try:
        od = orbit_data(report.omega, dec)
    except NotQuadraticEssentialError as exc:
        report.notes.append(f"orbit data unavailable: {exc}")
        return
    report.orbits = od
    if verdict is not None:
        report.feasibility = invariant_curve_feasibility(od, verdict)
        if report.feasibility.conic_tangent.conditional:
            report.notes.append("conic+tangent case 1 is conditional: point locations are not checked")
