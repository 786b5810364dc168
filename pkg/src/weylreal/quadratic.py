"""Quadratic elements kappa_{i,j,k} o s, their orbit data and invariant-curve feasibility."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import NotQuadraticEssentialError
from .weyl import WeylElement, compose, cremona, permutation_element


@dataclass(frozen=True)
class QuadraticDecomposition:
    n: int
    triple: Tuple[int, int, int]
    perm: Tuple[int, ...]  # one-line images of 1..n
    primes: Dict[int, int]  # l -> l' with perm(l') = l

    def recompose(self) -> WeylElement:
        return compose(cremona(self.n, self.triple), permutation_element(self.n, self.perm))

    def to_json(self) -> Dict:
        return {
            "triple": list(self.triple),
            "perm": list(self.perm),
            "primes": {str(k): v for k, v in sorted(self.primes.items())},
        }


def decompose_quadratic(omega: WeylElement) -> Optional[QuadraticDecomposition]:
    """Write omega as cremona(triple) o permutation, or return None."""
    n = omega.n
    col0 = omega.column(0)
    if col0[0] != 2:
        return None
    triple = tuple(i for i in range(1, n + 1) if col0[i] == -1)
    if len(triple) != 3 or any(col0[i] not in (0, -1) for i in range(1, n + 1)):
        return None
    s = compose(cremona(n, triple), omega)
    if s.column(0) != tuple(int(r == 0) for r in range(n + 1)):
        return None
    images = []
    for j in range(1, n + 1):
        col = s.column(j)
        hits = [r for r, c in enumerate(col) if c != 0]
        if len(hits) != 1 or hits[0] == 0 or col[hits[0]] != 1:
            return None
        images.append(hits[0])
    if sorted(images) != list(range(1, n + 1)):
        return None
    primes = {images[j - 1]: j for j in range(1, n + 1) if images[j - 1] in triple}
    return QuadraticDecomposition(n, triple, tuple(images), primes)


@dataclass(frozen=True)
class OrbitData:
    lengths: Dict[int, int]
    sigma: Dict[int, int]
    segments: Dict[int, Tuple[Tuple[int, ...], ...]]

    @property
    def triple(self) -> Tuple[int, ...]:
        return tuple(sorted(self.lengths))

    def sigma_kind(self) -> str:
        moved = [l for l in self.triple if self.sigma[l] != l]
        if not moved:
            return "identity"
        if len(moved) == 2:
            return "transposition"
        return "cyclic"

    def to_json(self) -> Dict:
        return {
            "lengths": {str(k): v for k, v in sorted(self.lengths.items())},
            "sigma": {str(k): str(v) for k, v in sorted(self.sigma.items())},
            "sigma_kind": self.sigma_kind(),
        }


def orbit_data(omega: WeylElement, dec: QuadraticDecomposition) -> OrbitData:
    """n_l is the first k with omega^k(e_l) of positive degree; sigma reads off omega^{n_l - 1}(e_l)."""
    n = omega.n
    inverse_primes = {p: l for l, p in dec.primes.items()}
    lengths: Dict[int, int] = {}
    sigma: Dict[int, int] = {}
    segments: Dict[int, Tuple[Tuple[int, ...], ...]] = {}
    m = omega.matrix
    for l in dec.triple:
        x = tuple(int(r == l) for r in range(n + 1))
        seg = [x]
        k = 0
        while True:
            y = tuple(sum(a * b for a, b in zip(row, x)) for row in m)
            k += 1
            if y[0] > 0:
                break
            if k >= n:
                raise NotQuadraticEssentialError(
                    f"orbit of e{l} stays in degree <= 0 for {n} steps"
                )
            seg.append(y)
            x = y
        lengths[l] = k
        segments[l] = tuple(seg)
        last = seg[-1]
        hits = [r for r, c in enumerate(last) if c != 0]
        if len(hits) != 1 or last[hits[0]] != 1 or hits[0] not in inverse_primes:
            raise NotQuadraticEssentialError(
                f"omega^{k - 1}(e{l}) is not an indeterminacy class e_(i'), e_(j'), e_(k')"
            )
        sigma[l] = inverse_primes[hits[0]]
    if sum(lengths.values()) != n:
        raise NotQuadraticEssentialError(
            f"orbit lengths {sorted(lengths.values())} sum to {sum(lengths.values())}, not n = {n}"
        )
    seen = set()
    for seg in segments.values():
        for x in seg:
            if x in seen:
                raise NotQuadraticEssentialError("orbit segments are not pairwise disjoint")
            seen.add(x)
    if sorted(sigma.values()) != sorted(dec.triple):
        raise NotQuadraticEssentialError("sigma is not a bijection of the triple")
    return OrbitData(lengths, sigma, segments)


@dataclass(frozen=True)
class Feasibility:
    feasible: bool
    code: str
    reason: str
    case: Optional[str] = None
    conditional: bool = False

    def to_json(self) -> Dict:
        return {
            "feasible": self.feasible,
            "case": self.case,
            "code": self.code,
            "reason": self.reason,
            "conditional": self.conditional,
        }


@dataclass(frozen=True)
class CurveFeasibility:
    three_lines: Feasibility
    conic_tangent: Feasibility
    cuspidal_cubic: Feasibility

    @property
    def any_feasible(self) -> bool:
        return self.three_lines.feasible or self.conic_tangent.feasible or self.cuspidal_cubic.feasible

    def to_json(self) -> Dict:
        return {
            "three_lines": self.three_lines.to_json(),
            "conic_tangent": self.conic_tangent.to_json(),
            "cuspidal_cubic": self.cuspidal_cubic.to_json(),
        }


def three_lines_feasibility(od: OrbitData) -> Feasibility:
    kind = od.sigma_kind()
    n = od.lengths
    if kind == "identity":
        return Feasibility(True, "sigma-identity", "sigma is the identity", "1")
    if kind == "transposition":
        a, b = [l for l in od.triple if od.sigma[l] != l]
        even = [l for l in (a, b) if n[l] % 2 == 0]
        if not even:
            return Feasibility(True, "transposition-odd",
                               f"sigma swaps {a},{b} with n_{a} = {n[a]} and n_{b} = {n[b]} odd", "2")
        l = even[0]
        return Feasibility(False, "transposition-parity", f"sigma swaps {a},{b} but n_{l} = {n[l]} is not odd")
    residues = {l: n[l] % 3 for l in od.triple}
    values = set(residues.values())
    if values in ({1}, {2}):
        r = values.pop()
        return Feasibility(True, "cyclic-congruence", f"all n_l = {r} (mod 3)", "3")
    zero = [l for l in od.triple if residues[l] == 0]
    if len(values) > 1:
        a, b = next((x, y) for x in od.triple for y in od.triple if residues[x] < residues[y])
        reason = f"sigma is cyclic and {n[a]} ≢ {n[b]} (mod 3)"
    else:
        reason = f"sigma is cyclic and n_{zero[0]} = {n[zero[0]]} = 0 (mod 3)"
    return Feasibility(False, "cyclic-congruence", reason)


def conic_tangent_feasibility(od: OrbitData) -> Feasibility:
    n = od.lengths
    even = [l for l in od.triple if n[l] % 2 == 0]
    if not even:
        return Feasibility(True, "all-odd", "all three orbit lengths are odd", "2")
    fixed = [l for l in od.triple if od.sigma[l] == l]
    if fixed:
        return Feasibility(
            True, "sigma-fixed-point",
            f"sigma fixes {fixed[0]}; requires p_l and p_l' on the tangent line (not checked)",
            "1", conditional=True,
        )
    return Feasibility(
        False, "no-fixed-point-and-even",
        f"sigma has no fixed point and n_{even[0]} = {n[even[0]]} is not odd",
    )


def invariant_curve_feasibility(od: OrbitData, harbourne) -> CurveFeasibility:
    """``harbourne`` is a verdict with ``realizable`` and ``violations`` attributes."""
    if harbourne.realizable:
        cubic = Feasibility(True, "harbourne-positive", "omega^-1 keeps every nodal root positive", "1")
    else:
        cubic = Feasibility(False, "harbourne-violation",
                            f"{len(harbourne.violations)} nodal root(s) mapped negative by omega^-1")
    return CurveFeasibility(three_lines_feasibility(od), conic_tangent_feasibility(od), cubic)
