import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from conftest import PROPERTY_CASES, random_quadratic, random_word_element
from weylreal import polynomials as P
from weylreal.errors import NoLeadingEigenvectorError
from weylreal.lattice import reflect, simple_roots
from weylreal.numberfield import NumberField, field_pairing, nf_inv, nf_mul, nf_sign
from weylreal.spectral import (
    cyclotomic_split,
    eigen_residual,
    isolate_largest_real_root,
    isotropy,
    leading_eigenvector,
    spectral_radius,
)
from weylreal.weyl import apply, char_poly, chi_n, compose, coxeter_element, identity, power

SALEM7 = (1, -1, 0, -1, 0, -1, 1)
T = sympy.Symbol("t")


def bisect_float(poly, lo, hi, steps=200):
    f = lambda x: sum(c * x**k for k, c in enumerate(poly))
    flo = f(lo)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if (f(mid) > 0) == (flo > 0):
            lo, flo = mid, f(mid)
        else:
            hi = mid
    return (lo + hi) / 2


def test_split_of_worked_element(example):
    split = cyclotomic_split(char_poly(example))
    assert split.salem_part == SALEM7
    assert split.verified
    assert dict(split.factors) == {1: 1, 2: 1, 4: 1, 12: 1}


def test_split_of_identity():
    split = cyclotomic_split(char_poly(identity(9)))
    assert split.salem_part == (1,)
    assert split.is_trivial and split.verified


def test_split_of_chi10_divides():
    split = cyclotomic_split(chi_n(10))
    assert P.degree(split.salem_part) == 10
    assert P.exact_quotient(chi_n(10), split.salem_part) is not None


def test_split_reconstructs_and_factors_are_cyclotomic():
    rng = random.Random(301)
    for _ in range(PROPERTY_CASES):
        n = rng.randrange(3, 13)
        cp = char_poly(random_word_element(rng, n, 25))
        split = cyclotomic_split(cp)
        assert P.mul(split.salem_part, split.cyclotomic_part) == cp
        for k, _ in split.factors:
            t_k_minus_1 = [-1] + [0] * (k - 1) + [1]
            assert P.exact_quotient(t_k_minus_1, P.cyclotomic(k)) is not None
        if split.verified and not split.is_trivial:
            assert P.count_real_roots(split.salem_part, 1, None) == 1


def test_split_against_sympy_factorization():
    rng = random.Random(302)
    checked = 0
    for _ in range(60):
        n = rng.randrange(8, 13)
        cp = char_poly(random_quadratic(rng, n))
        split = cyclotomic_split(cp)
        if not split.verified:
            continue
        expected = 1
        for fac, mult in sympy.factor_list(sympy.Poly(list(reversed(cp)), T))[1]:
            roots = [complex(r) for r in sympy.Poly(fac, T).nroots()]
            if all(abs(abs(r) - 1) < 1e-9 for r in roots):
                continue
            expected *= fac.as_expr() ** mult
        got = sympy.Poly(list(reversed(split.salem_part)), T)
        assert got == sympy.Poly(expected, T) or got == -sympy.Poly(expected, T)
        checked += expected != 1
    assert checked >= 5


def test_isolation_examples():
    iv = isolate_largest_real_root(SALEM7)
    assert iv.width <= Fraction(1, 10**12)
    assert iv.root_count() == 1
    assert abs(float(iv.midpoint) - 1.50614) < 1e-5
    assert isolate_largest_real_root((1, 0, 1)) is None


def test_coxeter10_radius_matches_bisection():
    r = spectral_radius(coxeter_element(10))
    oracle = bisect_float(r.split.salem_part, 1.0 + 1e-9, 2.0)
    assert r.interval.contains(Fraction(oracle)) or abs(float(r.interval.midpoint) - oracle) < 1e-12
    assert r.decimal().startswith("1.17628")


def test_isolating_intervals_hold_one_root():
    rng = random.Random(303)
    for _ in range(PROPERTY_CASES):
        n = rng.randrange(9, 13)
        r = spectral_radius(compose(random_quadratic(rng, n), random_word_element(rng, n, 6)))
        if r.is_one:
            continue
        iv = r.interval
        assert P.count_real_roots(r.split.salem_part, iv.lo, iv.hi) == 1


def test_radius_examples(example):
    assert spectral_radius(identity(5)).is_one
    r = spectral_radius(example)
    assert abs(float(r.interval.midpoint) - 1.50614) < 5e-6
    assert r.interval.strictly_above(spectral_radius(coxeter_element(13)).interval)


def seven_field():
    return NumberField(SALEM7, isolate_largest_real_root(SALEM7))


def test_number_field_examples():
    F = seven_field()
    lam = F.generator
    l5 = F.element([0, 0, 0, 0, 0, 1])
    assert nf_mul(l5, lam) == F.element([-1, 1, 0, 1, 0, 1])
    assert nf_inv(F.one) == F.one
    assert nf_sign(lam - 1) == 1
    assert nf_sign(1 - lam) == -1
    x = F.element([3, -2, 0, 1])
    assert x * nf_inv(x) == F.one
    with pytest.raises(ZeroDivisionError):
        nf_inv(F.zero)


def test_eigenvector_exact_on_worked_element(example):
    eig = leading_eigenvector(example)
    assert eigen_residual(example, eig).is_zero()
    assert isotropy(eig).is_zero()
    tail = [float(x) for x in eig.vector.entries[1:]]
    assert len({round(x, 9) for x in tail}) == 8


def test_eigenvector_matches_float_oracle(example):
    eig = leading_eigenvector(example)
    m = np.array(example.matrix, dtype=float)
    vals, vecs = np.linalg.eig(m)
    k = int(np.argmax(vals.real))
    ref = vecs[:, k].real
    ours = np.array([float(x) for x in eig.vector.entries])
    pivot = next(i for i, x in enumerate(ours) if abs(x) > 1e-12)
    assert np.allclose(ref / ref[pivot], ours, atol=1e-8)


def test_no_eigenvector_for_periodic_element():
    with pytest.raises(NoLeadingEigenvectorError):
        leading_eigenvector(coxeter_element(8))


def _expanding_elements(seed, count):
    rng = random.Random(seed)
    found = 0
    while found < count:
        n = rng.randrange(10, 13)
        # short random words are almost always periodic; quadratic elements often expand
        w = compose(random_quadratic(rng, n), random_word_element(rng, n, 4))
        r = spectral_radius(w)
        if r.is_one or not r.split.verified:
            continue
        found += 1
        yield w, r


def test_eigenvector_residual_and_isotropy_random():
    for w, r in _expanding_elements(304, PROPERTY_CASES):
        eig = leading_eigenvector(w, r)
        assert eigen_residual(w, eig).is_zero()
        assert isotropy(eig).is_zero()


def test_orthogonality_to_v_is_stable():
    rng = random.Random(305)
    for w, r in _expanding_elements(306, 25):
        eig = leading_eigenvector(w, r)
        n = w.n
        inv_pow = power(w, -1)
        # roots orthogonal to v are rare; test the implication on random roots and their images
        for _ in range(8):
            alpha = simple_roots(n)[rng.randrange(n)]
            for _ in range(rng.randrange(0, 10)):
                alpha = reflect(simple_roots(n)[rng.randrange(n)], alpha)
            p = field_pairing(eig.vector, alpha)
            # pairing(w a, v) = pairing(a, w^-1 v) = lambda^-1 pairing(a, v)
            image = apply(w, alpha)
            assert field_pairing(eig.vector, image) * eig.field.generator == p
            assert field_pairing(eig.vector, apply(inv_pow, alpha)) == p * eig.field.generator
