"""Exact arithmetic in Q(lambda) = Q[t]/(S) with a chosen real root lambda > 0.

Elements are reduced polynomials of degree < deg S with rational coefficients.
The real embedding is pinned by a rational isolating interval, which is what
makes sign tests exact: a nonzero element cannot vanish at lambda when S is
irreducible, so refining the interval eventually separates its value from 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from . import polynomials as P
from .errors import DimensionError, FieldDegeneracyError
from .polynomials import IsolatingInterval


@dataclass(frozen=True, eq=False)
class NumberField:
    modulus: Tuple[int, ...]
    interval: IsolatingInterval
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        mod = P.strip(self.modulus)
        if len(mod) < 2:
            raise ValueError("modulus must have positive degree")
        if mod[-1] != 1:
            mod = P.monic(mod)
        object.__setattr__(self, "modulus", tuple(mod))
        if self.interval.lo <= 0:
            raise ValueError("the embedding interval must lie in (0, infinity)")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def reduce(self, coeffs: Sequence) -> Tuple[Fraction, ...]:
        c = [Fraction(x) for x in coeffs]
        mod = self.modulus
        d = len(mod) - 1
        for k in range(len(c) - 1, d - 1, -1):
            f = c[k]
            if f == 0:
                continue
            for j in range(d + 1):
                c[k - d + j] -= f * mod[j]
        c = c[:d]
        c.extend([Fraction(0)] * (d - len(c)))
        return tuple(c)

    def element(self, coeffs: Iterable = ()) -> "FieldElement":
        return FieldElement(self, self.reduce(list(coeffs)))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value
        return self.element([value])

    @property
    def zero(self) -> "FieldElement":
        return self.element()

    @property
    def one(self) -> "FieldElement":
        return self.element([1])

    @property
    def generator(self) -> "FieldElement":
        """The element lambda itself."""
        return self.element([0, 1])

    def interval_at(self, width: Fraction) -> IsolatingInterval:
        iv = self._cache.get(width)
        if iv is None:
            iv = self.interval.refine(width) if self.interval.width > width else self.interval
            self._cache[width] = iv
        return iv

    def to_json(self) -> Dict:
        return {"modulus": [str(c) for c in self.modulus], "interval": self.interval.to_json()}


def _interval_eval(coeffs: Sequence[Fraction], lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
    """Bounds for sum c_k x^k over x in [lo, hi] with 0 < lo."""
    low = high = Fraction(0)
    plo = phi = Fraction(1)
    for c in coeffs:
        if c > 0:
            low += c * plo
            high += c * phi
        elif c < 0:
            low += c * phi
            high += c * plo
        plo *= lo
        phi *= hi
    return low, high


class FieldElement:
    """An element of a :class:`NumberField`; supports + - * / and ==."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise DimensionError("elements of different number fields")
            return other
        return self.field(other)

    def __add__(self, other) -> "FieldElement":
        o = self._lift(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> "FieldElement":
        o = self._lift(other)
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> "FieldElement":
        return self._lift(other) - self

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, tuple(a * other for a in self.coeffs))
        o = self._lift(other)
        prod = P.mul(self.coeffs, o.coeffs) if any(self.coeffs) and any(o.coeffs) else ()
        return FieldElement(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        return nf_inv(self)

    def __truediv__(self, other) -> "FieldElement":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in number field")
            return FieldElement(self.field, tuple(a / other for a in self.coeffs))
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other) -> "FieldElement":
        return self._lift(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def sign(self) -> int:
        return nf_sign(self)

    def bounds(self, width=Fraction(1, 10**12)) -> Tuple[Fraction, Fraction]:
        iv = self.field.interval_at(Fraction(width))
        return _interval_eval(self.coeffs, iv.lo, iv.hi)

    def __float__(self) -> float:
        lo, hi = self.bounds()
        return float((lo + hi) / 2)

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"FieldElement({P.to_string(P.strip(self.coeffs), 'L')})"


def nf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def nf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def nf_is_zero(a: FieldElement) -> bool:
    return a.is_zero()


def nf_inv(a: FieldElement) -> FieldElement:
    """Inverse by the extended Euclidean algorithm over Q."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in number field")
    mod = tuple(Fraction(c) for c in a.field.modulus)
    r0, r1 = mod, P.strip(a.coeffs)
    s0, s1 = (), (Fraction(1),)
    while len(r1) > 1:
        q, r = P.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, P.sub(s0, P.mul(q, s1))
    if not r1:
        raise FieldDegeneracyError(
            f"gcd(element, modulus) = {P.to_string(P.monic(r0))}: modulus is reducible"
        )
    # r1 is a nonzero constant: s1 * a == r1 (mod modulus)
    inv = P.scale(s1, 1 / Fraction(r1[0]))
    return a.field.element(inv)


def nf_sign(a: FieldElement) -> int:
    """Exact sign of a(lambda): refine the embedding interval until decided."""
    if a.is_zero():
        return 0
    width = Fraction(1, 2**40)
    for _ in range(64):
        lo, hi = a.bounds(width)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        width /= 2**16
    # a nonzero element with a(lambda) = 0 means the modulus has a proper factor
    g = P.gcd(a.field.modulus, P.strip(a.coeffs))
    raise FieldDegeneracyError(f"cannot separate element from zero; gcd with modulus is {g}")


class FieldVector:
    """A vector of field elements in the basis (e_0, ..., e_n)."""

    __slots__ = ("field", "entries")

    def __init__(self, field: NumberField, entries: Sequence):
        self.field = field
        self.entries = tuple(field(x) for x in entries)

    @property
    def rank(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, i: int) -> FieldElement:
        return self.entries[i]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldVector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def scaled(self, k) -> "FieldVector":
        return FieldVector(self.field, [x * k for x in self.entries])

    def __add__(self, other: "FieldVector") -> "FieldVector":
        return FieldVector(self.field, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldVector") -> "FieldVector":
        return FieldVector(self.field, [a - b for a, b in zip(self.entries, other.entries)])

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.entries)

    def to_json(self) -> List[List[str]]:
        return [x.to_json() for x in self.entries]


def field_pairing(v: FieldVector, x) -> FieldElement:
    """Minkowski pairing of a field vector with a lattice or field vector."""
    coords = x.coords if hasattr(x, "coords") else x.entries
    if len(coords) != len(v.entries):
        raise DimensionError("rank mismatch")
    acc = v.entries[0] * coords[0]
    for a, b in zip(v.entries[1:], coords[1:]):
        acc = acc - a * b
    return acc


def apply_matrix(matrix: Sequence[Sequence[int]], v: FieldVector) -> FieldVector:
    out = []
    for row in matrix:
        acc = v.field.zero
        for m, x in zip(row, v.entries):
            if m:
                acc = acc + x * m
        out.append(acc)
    return FieldVector(v.field, out)
