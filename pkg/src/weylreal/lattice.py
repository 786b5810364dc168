"""The lattice Z^{1,n}, its Minkowski pairing and the E_n-type root system.

Vectors are written in the basis (e_0, e_1, ..., e_n) with e_0.e_0 = 1 and
e_i.e_i = -1 for i >= 1.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, List, Sequence, Tuple

from .errors import DimensionError, InvalidRankError, NotARootError


@dataclass(frozen=True, eq=False)
class LatticeVector:
    coords: Tuple[int, ...]

    def __post_init__(self) -> None:
        coords = tuple(int(c) for c in self.coords)
        if len(coords) < 2:
            raise InvalidRankError("a lattice vector needs at least e_0 and e_1")
        object.__setattr__(self, "coords", coords)

    @property
    def rank(self) -> int:
        return len(self.coords) - 1

    # Root and LatticeVector compare equal when their coordinates agree.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeVector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other: "LatticeVector") -> None:
        if len(other.coords) != len(self.coords):
            raise DimensionError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(tuple(-a for a in self.coords))

    def __mul__(self, k: int) -> "LatticeVector":
        return LatticeVector(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def to_json(self) -> List[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return format_vector(self)


class Root(LatticeVector):
    """A lattice vector of norm -2 orthogonal to the canonical vector."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if not is_root(self):
            raise NotARootError(f"{list(self.coords)} is not a root")


class Sign(Enum):
    POSITIVE = 1
    NEGATIVE = -1


def basis_vector(n: int, i: int) -> LatticeVector:
    if not 0 <= i <= n:
        raise InvalidRankError(f"basis index {i} out of range for rank {n}")
    c = [0] * (n + 1)
    c[i] = 1
    return LatticeVector(tuple(c))


def vector(coords: Iterable[int]) -> LatticeVector:
    return LatticeVector(tuple(coords))


def pairing_coords(x: Sequence, y: Sequence):
    """Minkowski pairing on raw coordinate sequences (any ring)."""
    total = x[0] * y[0]
    for a, b in zip(x[1:], y[1:]):
        total -= a * b
    return total


def pairing(x: LatticeVector, y: LatticeVector) -> int:
    if len(x.coords) != len(y.coords):
        raise DimensionError(f"rank mismatch: {x.rank} vs {y.rank}")
    return pairing_coords(x.coords, y.coords)


def canonical_vector(n: int) -> LatticeVector:
    if n < 1:
        raise InvalidRankError("rank must be at least 1")
    return LatticeVector((-3,) + (1,) * n)


def simple_roots(n: int) -> List[Root]:
    """alpha_0 = e_0 - e_1 - e_2 - e_3 and alpha_i = e_i - e_{i+1}."""
    if n < 3:
        raise InvalidRankError("simple roots need n >= 3")
    roots = [Root((1, -1, -1, -1) + (0,) * (n - 3))]
    for i in range(1, n):
        c = [0] * (n + 1)
        c[i], c[i + 1] = 1, -1
        roots.append(Root(tuple(c)))
    return roots


def is_root(x: LatticeVector) -> bool:
    c = x.coords
    norm = pairing_coords(c, c)
    # pairing with kappa = (-3, 1, ..., 1) is -3 c_0 - sum c_i
    return norm == -2 and -3 * c[0] - sum(c[1:]) == 0


def simple_root_coordinates(alpha: LatticeVector) -> List[int]:
    """Integer coordinates of ``alpha`` in the simple-root basis.

    The simple roots are triangular with respect to (e_0, ..., e_{n-1}), so the
    system is solved by forward substitution; the last equation (the e_n
    coefficient) is the consistency check that ``alpha`` lies in kappa^perp.
    """
    x = alpha.coords
    n = len(x) - 1
    if n < 3:
        raise InvalidRankError("simple roots need n >= 3")
    c = [0] * n
    c[0] = x[0]
    # coefficient of e_m in sum c_j alpha_j is
    #   -c_0 [m <= 3] + c_m [m <= n-1] - c_{m-1} [m >= 2]
    for m in range(1, n):
        c[m] = x[m] + (c[0] if m <= 3 else 0) + (c[m - 1] if m >= 2 else 0)
    last = x[n] + (c[0] if n <= 3 else 0) + c[n - 1]
    if last != 0:
        raise NotARootError(f"{list(x)} is not orthogonal to the canonical vector")
    return c


def root_sign(alpha: LatticeVector) -> Sign:
    c = simple_root_coordinates(alpha)
    if all(ci >= 0 for ci in c) and any(c):
        return Sign.POSITIVE
    if all(ci <= 0 for ci in c) and any(c):
        return Sign.NEGATIVE
    raise NotARootError(f"mixed-sign simple-root coordinates {c} for {list(alpha.coords)}")


def is_positive_root(alpha: LatticeVector) -> bool:
    return root_sign(alpha) is Sign.POSITIVE


def reflect(alpha: LatticeVector, x: LatticeVector) -> LatticeVector:
    """s_alpha(x) = x + (x . alpha) alpha."""
    if len(alpha.coords) != len(x.coords):
        raise DimensionError(f"rank mismatch: {alpha.rank} vs {x.rank}")
    if not isinstance(alpha, Root) and not is_root(alpha):
        raise NotARootError(f"{list(alpha.coords)} is not a valid reflection axis")
    k = pairing(x, alpha)
    if k == 0:
        return x
    return LatticeVector(tuple(a + k * b for a, b in zip(x.coords, alpha.coords)))


def format_vector(x: LatticeVector) -> str:
    """Human form such as ``e0 - e1 - e7 - e13``."""
    parts = []
    for i, c in enumerate(x.coords):
        if c == 0:
            continue
        mag = abs(c)
        term = f"e{i}" if mag == 1 else f"{mag}e{i}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"
