import random
from itertools import permutations

import pytest

from conftest import PROPERTY_CASES, random_quadratic
from weylreal.errors import NotQuadraticEssentialError
from weylreal.quadratic import (
    OrbitData,
    conic_tangent_feasibility,
    decompose_quadratic,
    invariant_curve_feasibility,
    orbit_data,
    three_lines_feasibility,
)
from weylreal.realizability import RealizabilityVerdict
from weylreal.weyl import apply, compose, cremona, generator, identity, power
from weylreal.lattice import basis_vector


def od(lengths, sigma):
    return OrbitData(dict(lengths), dict(sigma), {})


def test_decompose_worked(example):
    dec = decompose_quadratic(example)
    assert dec.triple == (1, 7, 8)
    assert dec.perm == tuple(list(range(2, 14)) + [1])
    assert dec.primes == {1: 13, 7: 6, 8: 7}
    assert dec.recompose().matrix == example.matrix


def test_decompose_small_cases():
    dec = decompose_quadratic(cremona(3, (1, 2, 3)))
    assert dec.triple == (1, 2, 3) and dec.perm == (1, 2, 3)
    assert decompose_quadratic(generator(5, 1)) is None
    assert decompose_quadratic(identity(5)) is None
    # degree 2 but not of the form kappa o permutation
    assert decompose_quadratic(compose(cremona(6, (1, 2, 3)), generator(6, 0))) is None


def test_decompose_recompose_random():
    rng = random.Random(501)
    for _ in range(PROPERTY_CASES):
        n = rng.randrange(3, 21)
        w = random_quadratic(rng, n)
        dec = decompose_quadratic(w)
        assert dec is not None
        assert dec.recompose().matrix == w.matrix
        assert all(dec.perm[dec.primes[l] - 1] == l for l in dec.triple)


def test_orbit_data_worked(example):
    data = orbit_data(example, decompose_quadratic(example))
    assert data.lengths == {1: 6, 7: 1, 8: 6}
    assert data.sigma == {1: 7, 7: 8, 8: 1}
    assert data.sigma_kind() == "cyclic"
    assert sum(data.lengths.values()) == 13


def test_orbit_data_cremona3():
    w = cremona(3, (1, 2, 3))
    data = orbit_data(w, decompose_quadratic(w))
    assert data.lengths == {1: 1, 2: 1, 3: 1}
    assert data.sigma_kind() == "identity"


def test_orbit_data_definition_random():
    rng = random.Random(502)
    done = 0
    while done < PROPERTY_CASES:
        n = rng.randrange(3, 21)
        w = random_quadratic(rng, n)
        dec = decompose_quadratic(w)
        try:
            data = orbit_data(w, dec)
        except NotQuadraticEssentialError:
            continue
        done += 1
        assert sum(data.lengths.values()) == n
        assert sorted(data.sigma.values()) == sorted(data.triple)
        seen = set()
        for l in data.triple:
            k = data.lengths[l]
            segment = [apply(power(w, s), basis_vector(n, l)).coords for s in range(k)]
            assert all(x[0] == 0 for x in segment)
            assert apply(power(w, k), basis_vector(n, l))[0] > 0
            assert segment[-1] == basis_vector(n, dec.primes[data.sigma[l]]).coords
            assert not seen & set(segment)
            seen |= set(segment)


def test_three_lines_examples():
    f = three_lines_feasibility(od({1: 6, 7: 1, 8: 6}, {1: 7, 7: 8, 8: 1}))
    assert not f.feasible and "≢" in f.reason and "(mod 3)" in f.reason
    f = three_lines_feasibility(od({1: 1, 2: 1, 3: 1}, {1: 1, 2: 2, 3: 3}))
    assert f.feasible and f.case == "1"
    f = three_lines_feasibility(od({1: 3, 2: 5, 3: 7}, {1: 2, 2: 1, 3: 3}))
    assert f.feasible and f.case == "2"
    f = three_lines_feasibility(od({1: 4, 2: 5, 3: 7}, {1: 2, 2: 1, 3: 3}))
    assert not f.feasible and "4" in f.reason
    f = three_lines_feasibility(od({1: 4, 2: 1, 3: 7}, {1: 2, 2: 3, 3: 1}))
    assert f.feasible and f.case == "3"
    f = three_lines_feasibility(od({1: 3, 2: 3, 3: 6}, {1: 2, 2: 3, 3: 1}))
    assert not f.feasible


def test_conic_tangent_examples():
    f = conic_tangent_feasibility(od({1: 6, 7: 1, 8: 6}, {1: 7, 7: 8, 8: 1}))
    assert not f.feasible and "6 is not odd" in f.reason
    f = conic_tangent_feasibility(od({1: 3, 2: 5, 3: 7}, {1: 2, 2: 1, 3: 3}))
    assert f.feasible and f.case == "2"
    f = conic_tangent_feasibility(od({1: 2, 2: 5, 3: 7}, {1: 2, 2: 1, 3: 3}))
    assert f.feasible and f.case == "1" and f.conditional


def test_cubic_mirrors_harbourne(example_report):
    data = example_report.orbits
    assert not example_report.feasibility.cuspidal_cubic.feasible
    assert not example_report.feasibility.any_feasible
    ok = invariant_curve_feasibility(data, RealizabilityVerdict((), "Checked"))
    assert ok.cuspidal_cubic.feasible


@pytest.mark.parametrize("seed", range(4))
def test_feasibility_is_label_invariant(seed):
    rng = random.Random(600 + seed)
    for _ in range(PROPERTY_CASES // 4):
        labels = (1, 2, 3)
        lengths = {l: rng.randrange(1, 12) for l in labels}
        images = list(labels)
        rng.shuffle(images)
        sigma = dict(zip(labels, images))
        base = (three_lines_feasibility(od(lengths, sigma)), conic_tangent_feasibility(od(lengths, sigma)))
        for relabel in permutations((4, 9, 11)):
            m = dict(zip(labels, relabel))
            lengths2 = {m[l]: lengths[l] for l in labels}
            sigma2 = {m[l]: m[sigma[l]] for l in labels}
            got = (three_lines_feasibility(od(lengths2, sigma2)),
                   conic_tangent_feasibility(od(lengths2, sigma2)))
            assert [(f.feasible, f.code, f.case) for f in got] == [(f.feasible, f.code, f.case) for f in base]


def test_orbit_data_rejects_non_essential():
    # kappa composed with a permutation fixing e_4 pointwise never brings e_4 up in degree
    w = cremona(5, (1, 2, 3))
    with pytest.raises(NotQuadraticEssentialError):
        orbit_data(w, decompose_quadratic(w))
