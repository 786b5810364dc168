"""Elements of the Weyl group W_n as exact integer matrices.

A matrix acts on column coordinate vectors; column j is the image of e_j.
Composition ``compose(a, b)`` is the map ``a o b`` (apply ``b`` first).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from . import polynomials as P
from .errors import DimensionError, InvalidElementError, InvalidRankError
from .lattice import (
    LatticeVector,
    Sign,
    basis_vector,
    canonical_vector,
    pairing_coords,
    root_sign,
    simple_roots,
)

Matrix = Tuple[Tuple[int, ...], ...]


def _identity(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _matvec(a: Matrix, x: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(m * c for m, c in zip(row, x)) for row in a)


def _from_columns(cols: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*cols))


def _reflection_matrix(n: int, axis: Sequence[int]) -> Matrix:
    cols = []
    for j in range(n + 1):
        e = [0] * (n + 1)
        e[j] = 1
        k = pairing_coords(e, axis)
        cols.append([a + k * b for a, b in zip(e, axis)])
    return _from_columns(cols)


def check_matrix(n: int, matrix: Sequence[Sequence[int]]) -> Matrix:
    """Validate the W_n invariants, returning the matrix as nested tuples."""
    size = n + 1
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise InvalidElementError(f"matrix must be {size}x{size}")
    m: Matrix = tuple(tuple(int(c) for c in row) for row in matrix)
    cols = list(zip(*m))
    for i in range(size):
        for j in range(i, size):
            want = (1 if i == 0 else -1) if i == j else 0
            got = pairing_coords(cols[i], cols[j])
            if got != want:
                raise InvalidElementError(
                    f"pairing not preserved on (e{i}, e{j}): got {got}, expected {want}"
                )
    kappa = canonical_vector(n).coords
    if _matvec(m, kappa) != kappa:
        raise InvalidElementError("matrix does not fix the canonical vector")
    return m


@dataclass(frozen=True)
class WeylElement:
    n: int
    matrix: Matrix
    word: Optional[Tuple[int, ...]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvalidRankError("W_n needs n >= 3")

    @property
    def size(self) -> int:
        return self.n + 1

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    def __call__(self, x: LatticeVector) -> LatticeVector:
        return apply(self, x)

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return compose(self, other)

    def is_identity(self) -> bool:
        return self.matrix == _identity(self.size)

    def to_json(self) -> Dict:
        if self.word is not None:
            return {"n": self.n, "word": list(self.word)}
        return {"n": self.n, "matrix": [list(r) for r in self.matrix]}


def identity(n: int) -> WeylElement:
    return WeylElement(n, _identity(n + 1), ())


def generator(n: int, i: int) -> WeylElement:
    """The simple reflection s_i."""
    if n < 3:
        raise InvalidRankError("W_n needs n >= 3")
    if not 0 <= i <= n - 1:
        raise InvalidElementError(f"generator index {i} out of range 0..{n - 1}")
    alpha = simple_roots(n)[i].coords
    return WeylElement(n, _reflection_matrix(n, alpha), (i,))


def reflection(n: int, axis: LatticeVector) -> WeylElement:
    """Reflection through an arbitrary root as an element of W_n."""
    if axis.rank != n:
        raise DimensionError(f"rank mismatch: {axis.rank} vs {n}")
    return from_matrix(n, _reflection_matrix(n, axis.coords))


def cremona(n: int, triple: Sequence[int]) -> WeylElement:
    """kappa_{i,j,k}: reflection through e_0 - e_i - e_j - e_k."""
    i, j, k = sorted(int(t) for t in triple)
    if len({i, j, k}) != 3:
        raise InvalidElementError(f"Cremona indices must be distinct, got {list(triple)}")
    if i < 1 or k > n:
        raise InvalidElementError(f"Cremona indices must lie in 1..{n}")
    axis = [0] * (n + 1)
    axis[0] = 1
    for t in (i, j, k):
        axis[t] = -1
    return WeylElement(n, _reflection_matrix(n, axis))


def permutation_element(n: int, perm: Union[Sequence[int], Dict[int, int]]) -> WeylElement:
    """Element fixing e_0 with e_i -> e_{perm(i)}.

    ``perm`` is either a mapping or the one-line list of images of 1..n.
    """
    images = [perm[i] for i in range(1, n + 1)] if isinstance(perm, dict) else list(perm)
    if len(images) != n or sorted(images) != list(range(1, n + 1)):
        raise InvalidElementError(f"not a bijection of 1..{n}: {images}")
    cols = [[int(r == 0) for r in range(n + 1)]]
    for i in range(1, n + 1):
        c = [0] * (n + 1)
        c[images[i - 1]] = 1
        cols.append(c)
    return WeylElement(n, _from_columns(cols))


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """a o b; words concatenate when both are known."""
    if a.n != b.n:
        raise DimensionError(f"rank mismatch: {a.n} vs {b.n}")
    word = a.word + b.word if a.word is not None and b.word is not None else None
    return WeylElement(a.n, _matmul(a.matrix, b.matrix), word)


def inverse(a: WeylElement) -> WeylElement:
    """J M^T J with J = diag(1, -1, ..., -1)."""
    size = a.size
    sign = [1] + [-1] * (size - 1)
    m = tuple(tuple(sign[i] * a.matrix[j][i] * sign[j] for j in range(size)) for i in range(size))
    word = tuple(reversed(a.word)) if a.word is not None else None
    return WeylElement(a.n, m, word)


def power(a: WeylElement, k: int) -> WeylElement:
    base = a if k >= 0 else inverse(a)
    out = identity(a.n)
    out = WeylElement(a.n, out.matrix, None)
    for _ in range(abs(k)):
        out = WeylElement(a.n, _matmul(out.matrix, base.matrix))
    return out


def apply(a: WeylElement, x: LatticeVector) -> LatticeVector:
    if x.rank != a.n:
        raise DimensionError(f"rank mismatch: element of W_{a.n} on vector of rank {x.rank}")
    return LatticeVector(_matvec(a.matrix, x.coords))


def from_word(n: int, word: Sequence[int]) -> WeylElement:
    out = identity(n)
    for i in word:
        out = compose(out, generator(n, int(i)))
    return out


def from_matrix(n: int, matrix: Sequence[Sequence[int]]) -> WeylElement:
    return WeylElement(n, check_matrix(n, matrix))


def validate(a: WeylElement) -> None:
    """Re-check every invariant of ``a`` (including its word, when present)."""
    check_matrix(a.n, a.matrix)
    if a.word is not None and from_word(a.n, a.word).matrix != a.matrix:
        raise InvalidElementError("word does not match matrix")


def length(a: WeylElement) -> Tuple[int, Tuple[int, ...]]:
    """Coxeter length and a reduced word, by right descents.

    While the element is not the identity, take the smallest i with a(alpha_i)
    negative and replace a by a s_i.  The recorded indices, reversed, spell a
    reduced word.
    """
    alphas = simple_roots(a.n)
    m = a.matrix
    recorded: List[int] = []
    ident = _identity(a.size)
    while m != ident:
        for i, alpha in enumerate(alphas):
            image = LatticeVector(_matvec(m, alpha.coords))
            if root_sign(image) is Sign.NEGATIVE:
                break
        else:  # pragma: no cover - impossible for a valid element
            raise InvalidElementError("no descent found for a non-identity element")
        recorded.append(i)
        m = _matmul(m, generator(a.n, i).matrix)
    word = tuple(reversed(recorded))
    return len(word), word


def charpoly_of_matrix(matrix: Sequence[Sequence[int]]) -> P.Poly:
    """det(tI - M) by Berkowitz's division-free algorithm (ascending coefficients)."""
    a = [list(r) for r in matrix]
    size = len(a)
    if size == 0:
        return (1,)
    # descending coefficients of the char poly of the trailing 1x1 block
    poly = [1, -a[size - 1][size - 1]]
    for k in range(size - 2, -1, -1):
        row = a[k][k + 1:]
        col = [a[r][k] for r in range(k + 1, size)]
        sub = [r[k + 1:] for r in a[k + 1:]]
        m = size - k - 1
        q = [1, -a[k][k]]
        vec = col
        for _ in range(m):
            q.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(x * y for x, y in zip(r, vec)) for r in sub]
        new = []
        for i in range(m + 2):
            new.append(sum(q[i - j] * poly[j] for j in range(0, min(i, m) + 1)))
        poly = new
    return P.strip(reversed(poly))


def char_poly(a: WeylElement) -> P.Poly:
    return charpoly_of_matrix(a.matrix)


def coxeter_element(n: int) -> WeylElement:
    """s_0 s_1 ... s_{n-1}."""
    return from_word(n, range(n))


def chi_n(n: int) -> P.Poly:
    """t^n (t^3 - t - 1) + (t^3 + t^2 - 1)."""
    head = [0] * (n + 4)
    head[n + 3] += 1
    head[n + 1] -= 1
    head[n] -= 1
    return P.add(head, (-1, 0, 1, 1))


@dataclass(frozen=True)
class NecessaryCheck:
    passes: bool
    witness: Optional[int] = None
    steps: Dict[int, int] = field(default_factory=dict)

    def to_json(self) -> Dict:
        return {"passes": self.passes, "witness": self.witness,
                "steps": {str(k): v for k, v in sorted(self.steps.items())}}


def essential_necessary_check(a: WeylElement, max_power: Optional[int] = None) -> NecessaryCheck:
    """Necessary condition for essentiality: every e_i orbit meets degree != 0.

    ``steps`` records, per index, the first power k with a^k(e_i) . e_0 != 0.
    """
    n = a.n
    if max_power is None:
        max_power = 4 * (n + 1) ** 2
    steps: Dict[int, int] = {}
    for i in range(1, n + 1):
        x = basis_vector(n, i).coords
        seen = {x}
        k = 0
        while True:
            x = _matvec(a.matrix, x)
            k += 1
            if x[0] != 0:
                steps[i] = k
                break
            if x in seen or k >= max_power:
                return NecessaryCheck(False, i, steps)
            seen.add(x)
    return NecessaryCheck(True, None, steps)
