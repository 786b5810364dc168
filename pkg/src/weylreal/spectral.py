"""Salem/cyclotomic splitting, the spectral radius and the leading eigenvector."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import polynomials as P
from .errors import InternalVerificationError, NoLeadingEigenvectorError
from .numberfield import FieldVector, NumberField, apply_matrix, field_pairing
from .polynomials import IsolatingInterval
from .weyl import WeylElement, char_poly

DEFAULT_MAX_ORDER = 420
REPORT_WIDTH = Fraction(1, 10**12)


def default_max_order() -> int:
    value = os.environ.get("WEYL_MAX_CYCLOTOMIC_ORDER")
    return int(value) if value else DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class SalemSplit:
    salem_part: P.Poly
    cyclotomic_part: P.Poly
    verified: bool
    factors: Tuple[Tuple[int, int], ...] = ()  # (order k, multiplicity)
    notes: Tuple[str, ...] = ()

    @property
    def is_trivial(self) -> bool:
        """True when every eigenvalue is a root of unity."""
        return len(self.salem_part) <= 1

    def to_json(self) -> Dict:
        return {
            "salem_part": list(self.salem_part),
            "cyclotomic_part": list(self.cyclotomic_part),
            "cyclotomic_factors": [{"order": k, "multiplicity": m} for k, m in self.factors],
            "verified": self.verified,
            "notes": list(self.notes),
        }


def cyclotomic_split(p: P.Poly, max_order: Optional[int] = None) -> SalemSplit:
    """Strip cyclotomic factors Phi_k (k <= max_order) by exact trial division."""
    if max_order is None:
        max_order = default_max_order()
    p = P.strip(p)
    if not p:
        raise ValueError("cannot split the zero polynomial")
    rest = p
    cyc: P.Poly = (1,)
    factors: List[Tuple[int, int]] = []
    for k in range(1, max_order + 1):
        if P.euler_phi(k) > len(rest) - 1:
            continue
        phi = P.cyclotomic(k)
        mult = 0
        while len(rest) - 1 >= len(phi) - 1:
            q = P.exact_quotient(rest, phi)
            if q is None:
                break
            rest, cyc, mult = q, P.mul(cyc, phi), mult + 1
        if mult:
            factors.append((k, mult))
    notes: List[str] = []
    if len(rest) == 1:
        # constant leftover (+-1) is folded into the cyclotomic part
        cyc = P.scale(cyc, rest[0])
        rest = (1,)
        verified = True
    else:
        if rest[-1] < 0:
            rest, cyc = P.scale(rest, -1), P.scale(cyc, -1)
        verified = True
        if not P.is_reciprocal(rest):
            verified = False
            notes.append("remaining factor is not reciprocal")
        above = P.count_real_roots(rest, 1, None)
        below = P.count_real_roots(rest, 0, 1)
        if above != 1 or below != 1:
            verified = False
            notes.append(
                f"remaining factor has {above} real roots in (1, inf) and {below} in (0, 1]; "
                f"cyclotomic factors of order > {max_order} may remain"
            )
    if P.mul(rest, cyc) != p:
        raise InternalVerificationError("Salem x cyclotomic part does not reproduce the input")
    return SalemSplit(tuple(rest), tuple(cyc), verified, tuple(factors), tuple(notes))


def isolate_largest_real_root(p: P.Poly, width=REPORT_WIDTH) -> Optional[IsolatingInterval]:
    """Greatest real root strictly above 1, or None."""
    return P.isolate_largest_real_root(p, above=1, width=width)


@dataclass(frozen=True)
class SpectralRadius:
    """Either exactly 1 (``interval is None``) or an isolating interval for lambda > 1."""

    interval: Optional[IsolatingInterval]
    split: SalemSplit
    charpoly: P.Poly

    @property
    def is_one(self) -> bool:
        return self.interval is None

    def decimal(self, digits: int = 10) -> str:
        return "1" if self.interval is None else self.interval.decimal(digits)

    def to_json(self) -> Dict:
        if self.interval is None:
            return {"decimal": "1", "interval": ["1", "1"], "exact": True}
        return {"decimal": self.decimal(), "interval": self.interval.to_json(), "exact": False}


def spectral_radius(omega: WeylElement, max_order: Optional[int] = None) -> SpectralRadius:
    cp = char_poly(omega)
    split = cyclotomic_split(cp, max_order)
    if split.is_trivial:
        return SpectralRadius(None, split, cp)
    iv = isolate_largest_real_root(split.salem_part)
    return SpectralRadius(iv, split, cp)


def salem_field(split: SalemSplit, interval: IsolatingInterval) -> NumberField:
    return NumberField(split.salem_part, interval)


def _krylov_eigenvector(matrix, charpoly: P.Poly, F: NumberField) -> List:
    """Columns of h(M) with h(t) = charpoly(t) / (t - lambda) are eigenvectors.

    The coefficients of h lie in Q(lambda) (synthetic division), and
    h(M) x = sum_k h_k (M^k x) only needs integer Krylov vectors M^k x.
    """
    size = len(matrix)
    lam = F.generator
    # synthetic division of charpoly (ascending) by (t - lambda)
    desc = list(reversed(charpoly))
    h_desc = [F.one * desc[0]]
    for c in desc[1:-1]:
        h_desc.append(h_desc[-1] * lam + c)
    h = list(reversed(h_desc))  # ascending, degree size - 1
    for start in range(size):
        x = [int(i == start) for i in range(size)]
        krylov = []
        for _ in range(len(h)):
            krylov.append(x)
            x = [sum(m * c for m, c in zip(row, x)) for row in matrix]
        entries = []
        for i in range(size):
            acc = F.zero
            for k, hk in enumerate(h):
                c = krylov[k][i]
                if c:
                    acc = acc + hk * c
            entries.append(acc)
        if any(not e.is_zero() for e in entries):
            return entries
    raise NoLeadingEigenvectorError("h(M) vanished on every basis vector")


@dataclass(frozen=True)
class LeadingEigen:
    field: NumberField
    vector: FieldVector
    radius: SpectralRadius


def leading_eigenvector(omega: WeylElement, radius: Optional[SpectralRadius] = None) -> LeadingEigen:
    """Exact eigenvector v with omega v = lambda v, normalized so its first nonzero entry is 1."""
    if radius is None:
        radius = spectral_radius(omega)
    if radius.is_one:
        raise NoLeadingEigenvectorError("spectral radius is 1; no leading eigenvector")
    if not radius.split.verified:
        raise NoLeadingEigenvectorError(
            "Salem split not verified: " + "; ".join(radius.split.notes)
        )
    F = salem_field(radius.split, radius.interval)
    entries = _krylov_eigenvector(omega.matrix, radius.charpoly, F)
    pivot = next(e for e in entries if not e.is_zero())
    inv = pivot.inverse()
    v = FieldVector(F, [e * inv for e in entries])
    lam = F.generator
    if apply_matrix(omega.matrix, v) != v.scaled(lam):
        raise InternalVerificationError("eigenvector residual is not zero")
    return LeadingEigen(F, v, radius)


def eigen_residual(omega: WeylElement, eig: LeadingEigen) -> FieldVector:
    return apply_matrix(omega.matrix, eig.vector) - eig.vector.scaled(eig.field.generator)


def isotropy(eig: LeadingEigen):
    return field_pairing(eig.vector, eig.vector)
