import random
import sys
from pathlib import Path

import pytest

from weylreal import weyl as W

sys.path.insert(0, str(Path(__file__).parent))

PROPERTY_CASES = 200


def example_element() -> W.WeylElement:
    return W.compose(W.cremona(13, (1, 7, 8)), W.permutation_element(13, list(range(2, 14)) + [1]))


def random_word_element(rng: random.Random, n: int, max_len: int = 30) -> W.WeylElement:
    return W.from_word(n, [rng.randrange(n) for _ in range(rng.randrange(0, max_len + 1))])


def random_quadratic(rng: random.Random, n: int) -> W.WeylElement:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return W.compose(W.cremona(n, rng.sample(range(1, n + 1), 3)), W.permutation_element(n, perm))


@pytest.fixture(scope="session")
def example():
    return example_element()


@pytest.fixture(scope="session")
def example_report():
    from weylreal.realizability import analyze

    return analyze(example_element())


def expanding_reports(seed: int, count: int = PROPERTY_CASES, ranks=(10, 13)):
    """Analyzed random quadratic elements with spectral radius > 1."""
    from weylreal.realizability import analyze

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        report = analyze(random_quadratic(rng, rng.randrange(*ranks)))
        if report.applicable:
            out.append(report)
    return out


@pytest.fixture(scope="session")
def report_pool():
    return expanding_reports(20261015)
