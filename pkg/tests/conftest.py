import itertools

import pytest

from nuplus import torus_semigroup, unknot
from nuplus.checks import pretzel_12n242


def brute_image(gens, upto):
    """Sorted elements <= upto of the additive closure of gens, by enumerating coefficients."""
    gens = list(gens)
    ranges = [range(upto // g + 1) for g in gens]
    out = set()
    for coeffs in itertools.product(*ranges):
        s = sum(c * g for c, g in zip(coeffs, gens))
        if s <= upto:
            out.add(s)
    return sorted(out)


def brute_gamma(gens, n_max):
    """Gamma(0..n_max) of <gens>, padded generously."""
    upto = 4 * max(gens) * max(gens) + 2 * n_max + 4
    image = brute_image(gens, upto)
    return image[: n_max + 1]


def brute_nu(gamma_k, delta_k, gamma_l, delta_l):
    """nu+(K # mirror L) straight from the defining max over a long stretch of n."""
    n_max = min(len(gamma_k), len(gamma_l)) - 1
    best = max(gamma_l[n] - gamma_k[n] for n in range(n_max + 1))
    return max(delta_k - delta_l + best, 0)


@pytest.fixture(scope="session")
def T():
    return torus_semigroup


@pytest.fixture(scope="session")
def U():
    return unknot()


@pytest.fixture(scope="session")
def pretzel():
    return pretzel_12n242()
