import random
from fractions import Fraction

import pytest

from conftest import PROPERTY_CASES
from weylreal.errors import DimensionError, InvalidRankError, NotARootError
from weylreal.lattice import (
    LatticeVector,
    Root,
    Sign,
    basis_vector,
    canonical_vector,
    is_positive_root,
    is_root,
    pairing,
    reflect,
    root_sign,
    simple_root_coordinates,
    simple_roots,
    vector,
)


def e(n, i):
    return basis_vector(n, i)


def test_pairing_examples():
    assert pairing(e(3, 0), e(3, 0)) == 1
    assert pairing(e(3, 2), e(3, 2)) == -1
    assert pairing(canonical_vector(10), canonical_vector(10)) == -1
    alpha0 = simple_roots(5)[0]
    assert pairing(alpha0, alpha0) == -2


def test_pairing_rank_mismatch():
    with pytest.raises(DimensionError):
        pairing(e(3, 0), e(4, 0))


def test_canonical_vector():
    assert canonical_vector(3).coords == (-3, 1, 1, 1)
    for n in range(3, 13):
        k = canonical_vector(n)
        assert pairing(k, e(n, 0)) == -3
        assert all(pairing(k, a) == 0 for a in simple_roots(n))
    with pytest.raises(InvalidRankError):
        canonical_vector(0)


def test_simple_roots_n3():
    assert [r.coords for r in simple_roots(3)] == [(1, -1, -1, -1), (0, 1, -1, 0), (0, 0, 1, -1)]
    with pytest.raises(InvalidRankError):
        simple_roots(2)


def test_simple_root_pairings():
    a = simple_roots(6)
    assert all(pairing(r, r) == -2 for r in a)
    assert pairing(a[1], a[2]) == 1
    assert pairing(a[1], a[3]) == 0
    assert pairing(a[0], a[3]) == 1


def test_is_root_examples():
    assert is_root(vector([0, 1, -1, 0]))
    assert not is_root(vector([1, -1, 0, 0]))
    assert is_root(vector([2, -1, -1, -1, -1, -1, -1]))
    assert not is_root(canonical_vector(10))


def test_root_constructor_validates():
    with pytest.raises(NotARootError):
        Root((1, -1, 0, 0))


def test_simple_root_coordinates_examples():
    n = 6
    a = simple_roots(n)
    assert simple_root_coordinates(a[1]) == [0, 1, 0, 0, 0, 0]
    assert simple_root_coordinates(vector([1, -1, -1, 0, -1, 0, 0])) == [1, 0, 0, 1, 0, 0]
    assert simple_root_coordinates(-a[0]) == [-1, 0, 0, 0, 0, 0]


def test_simple_root_coordinates_rejects_non_orthogonal():
    with pytest.raises(NotARootError):
        simple_root_coordinates(vector([1, 0, 0, 0, 0]))


def test_root_sign_examples():
    assert root_sign(vector([0, 1, -1, 0])) is Sign.POSITIVE
    assert root_sign(vector([0, -1, 1, 0])) is Sign.NEGATIVE
    assert root_sign(vector([1, -1, -1, 0, -1])) is Sign.POSITIVE


def test_root_sign_mixed_is_rejected():
    # a1 - a2 has norm -6, so it is not a root, and its coordinates are mixed
    with pytest.raises(NotARootError):
        root_sign(vector([0, 1, -2, 1, 0]))


def test_reflect_examples():
    n = 5
    a = simple_roots(n)
    assert reflect(a[0], e(n, 0)).coords == (2, -1, -1, -1, 0, 0)
    assert reflect(a[2], a[2]) == -a[2]
    x = vector([1, 0, 0, 0, 1, -1])
    assert pairing(x, a[1]) == 0
    assert reflect(a[1], x) == x


def test_reflect_rejects_non_root_axis():
    with pytest.raises(NotARootError):
        reflect(vector([1, -1, 0, 0]), e(3, 0))


def _solve_fraction(alpha):
    """Independent oracle: Gauss-Jordan over Q on the (n+1) x n system."""
    n = alpha.rank
    cols = [r.coords for r in simple_roots(n)]
    rows = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(alpha.coords[i])] for i in range(n + 1)]
    piv_row = 0
    where = [-1] * n
    for c in range(n):
        p = next((r for r in range(piv_row, n + 1) if rows[r][c] != 0), None)
        if p is None:
            continue
        rows[piv_row], rows[p] = rows[p], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [x / pv for x in rows[piv_row]]
        for r in range(n + 1):
            if r != piv_row and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv_row])]
        where[c] = piv_row
        piv_row += 1
    assert all(rows[r][n] == 0 for r in range(piv_row, n + 1))
    return [rows[where[c]][n] for c in range(n)]


def _random_root(rng, n):
    x = simple_roots(n)[rng.randrange(n)]
    for _ in range(rng.randrange(0, 25)):
        x = reflect(simple_roots(n)[rng.randrange(n)], x)
    return x


def test_simple_root_coordinates_match_fraction_oracle():
    rng = random.Random(101)
    for _ in range(PROPERTY_CASES):
        n = rng.randrange(3, 13)
        alpha = _random_root(rng, n)
        c = simple_root_coordinates(alpha)
        assert c == _solve_fraction(alpha)
        recon = [0] * (n + 1)
        for ci, a in zip(c, simple_roots(n)):
            recon = [x + ci * y for x, y in zip(recon, a.coords)]
        assert tuple(recon) == alpha.coords


def test_root_sign_flips_under_negation():
    rng = random.Random(102)
    for _ in range(PROPERTY_CASES):
        alpha = _random_root(rng, rng.randrange(3, 13))
        assert root_sign(alpha) is not root_sign(-alpha)


def test_reflection_involutive_and_isometric():
    rng = random.Random(103)
    for _ in range(PROPERTY_CASES):
        n = rng.randrange(3, 13)
        alpha = _random_root(rng, n)
        x = vector([rng.randint(-5, 5) for _ in range(n + 1)])
        y = vector([rng.randint(-5, 5) for _ in range(n + 1)])
        assert reflect(alpha, reflect(alpha, x)) == x
        assert pairing(reflect(alpha, x), reflect(alpha, y)) == pairing(x, y)
        assert reflect(alpha, canonical_vector(n)) == canonical_vector(n)


def _bounded_roots(n, bound=3):
    """All lattice roots with |x_0| <= bound, enumerated directly."""
    from itertools import product

    out = set()
    for x0 in range(-bound, bound + 1):
        # sum x_i = -3 x0 and sum x_i^2 = x0^2 + 2 force |x_i| <= isqrt(x0^2 + 2)
        m = int((x0 * x0 + 2) ** 0.5)
        for tail in product(range(-m, m + 1), repeat=n):
            if sum(tail) == -3 * x0 and sum(t * t for t in tail) == x0 * x0 + 2:
                out.add((x0,) + tail)
    return out


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_root_criterion_matches_reflection_closure(n):
    simple = simple_roots(n)
    seen = {a.coords for a in simple}
    frontier = list(simple)
    while frontier:
        nxt = []
        for x in frontier:
            for a in simple:
                y = reflect(a, x)
                if abs(y[0]) <= 3 and y.coords not in seen:
                    seen.add(y.coords)
                    nxt.append(y)
        frontier = nxt
    assert seen == _bounded_roots(n)
    positives = sum(1 for c in seen if is_positive_root(LatticeVector(c)))
    # E3 = A2 x A1, E4 = A4, E5 = D5, E6
    assert positives == {3: 4, 4: 10, 5: 20, 6: 36}[n]


def test_lattice_vector_equality_across_classes():
    assert Root((0, 1, -1, 0)) == LatticeVector((0, 1, -1, 0))
    assert hash(Root((0, 1, -1, 0))) == hash(LatticeVector((0, 1, -1, 0)))
    assert str(vector([1, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1])) == "e0 - e1 - e7 - e13"
