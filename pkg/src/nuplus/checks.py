"""Grid sweeps that cross-check the closed formulas against each other and the oracle."""
from __future__ import annotations

import math
import random
from typing import Iterable, Iterator, Optional

import numpy as np

from .nu_plus import nu_plus_sum, positive_part, unclamped_nu, v_sequence_sum
from .obstructions import subadditivity_check
from .oracle import min_truncation, v_sequence_oracle
from .semigroups import (
    AlexanderVector,
    EnumeratingFunction,
    from_alexander,
    to_alexander,
    torus_semigroup,
    validate,
)
from .staircase import staircase_from_gamma, tower_chain

PRETZEL_12N242 = (5, 4, 2, 1, 0, -1, -2, -4, -5)


def pretzel_12n242() -> EnumeratingFunction:
    return from_alexander(AlexanderVector(PRETZEL_12N242), label="12n242")


def torus_grid(max_pq: int = 60) -> list[EnumeratingFunction]:
    """All torus knots ``T(p, q)``, ``2 <= p < q``, ``gcd = 1``, ``p*q <= max_pq``."""
    return [
        torus_semigroup(p, q)
        for p in range(2, max_pq)
        for q in range(p + 1, max_pq // p + 1)
        if math.gcd(p, q) == 1
    ]


def oracle_pairs(max_pq: int = 60) -> list[tuple[EnumeratingFunction, EnumeratingFunction]]:
    grid = torus_grid(max_pq)
    pairs = [(K, L) for K in grid for L in grid]
    P = pretzel_12n242()
    for T in (torus_semigroup(2, 3), torus_semigroup(3, 4), torus_semigroup(2, 7)):
        pairs += [(P, T), (T, P)]
    return pairs


def oracle_mismatches(pairs, N: Optional[int] = None) -> list[tuple[str, str]]:
    bad = []
    for K, L in pairs:
        if v_sequence_oracle(K, staircase_from_gamma(L), N) != v_sequence_sum(K, L):
            bad.append((K.name, L.name))
    return bad


def truncation_dependent(pairs, count: int = 5, seed: int = 2017) -> list[tuple[str, str]]:
    """Pairs (out of ``count`` sampled) whose oracle V-sequence changes when N doubles."""
    rng = random.Random(seed)
    bad = []
    for K, L in rng.sample(list(pairs), count):
        sL = staircase_from_gamma(L)
        N = min_truncation(K, sL)
        if v_sequence_oracle(K, sL, N) != v_sequence_oracle(K, sL, 2 * N):
            bad.append((K.name, L.name))
    return bad


def counting_equivalence(gK: EnumeratingFunction, gL: EnumeratingFunction) -> bool:
    """Counting-function form of the genus bound agrees with the nu+ form for every budget ``g``."""
    dK, dL = gK.delta, gL.delta
    nu = nu_plus_sum(gK, gL)
    for g in range(max(0, dK - dL), dK + dL + 2):
        a = np.arange(1 - dK, max(dK, dL - g) + 2)
        lhs = bool(np.all(counts(gK, a + dK) <= counts(gL, a + dL + g)))
        if lhs != (nu <= g):
            return False
    return True


def counts(g: EnumeratingFunction, n: np.ndarray) -> np.ndarray:
    """Vectorized counting function ``R``."""
    n = np.asarray(n)
    inside = np.searchsorted(np.asarray(g.prefix), n, side="left")
    out = np.where(n > 2 * g.delta, n - g.delta, inside)
    return np.where(n <= 0, 0, out)


def property_failures(knots: Iterable[EnumeratingFunction]) -> dict[str, list]:
    """Run the pairwise and single-knot property suites; returns failures per property."""
    knots = list(knots)
    fails: dict[str, list] = {
        "gap_symmetry": [],
        "alexander_round_trip": [],
        "unit_step": [],
        "tower_chain_clamp": [],
        "subadditivity": [],
        "counting_equivalence": [],
    }
    stairs = {}
    for g in knots:
        if not validate(g).gap_symmetric:
            fails["gap_symmetry"].append(g.name)
        if from_alexander(to_alexander(g)) != g or to_alexander(from_alexander(to_alexander(g))) != to_alexander(g):
            fails["alexander_round_trip"].append(g.name)
        stairs[g.name] = staircase_from_gamma(g)
    for K in knots:
        for L in knots:
            pair = (K.name, L.name)
            try:
                v_sequence_sum(K, L)
            except ValueError:
                fails["unit_step"].append(pair)
            if positive_part(tower_chain(K, stairs[L.name]).M) != nu_plus_sum(K, L):
                fails["tower_chain_clamp"].append(pair)
            if tower_chain(K, stairs[L.name]).M != unclamped_nu(K, L):
                fails["tower_chain_clamp"].append(pair)
            if not subadditivity_check(K, L):
                fails["subadditivity"].append(pair)
            if not counting_equivalence(K, L):
                fails["counting_equivalence"].append(pair)
    return fails


def random_lspace(steps: Iterable[int]) -> EnumeratingFunction:
    """L-space enumerating function of the staircase with the given horizontal steps.

    Vertical steps are the horizontal ones reversed, which is what symmetry forces.
    """
    h = list(steps)
    alpha = [sum(h)]
    for hk, vk in zip(h, reversed(h)):
        alpha.append(alpha[-1] - hk)
        alpha.append(alpha[-1] - vk)
    return from_alexander(AlexanderVector(tuple(alpha)))


def iter_pairs(knots) -> Iterator[tuple[EnumeratingFunction, EnumeratingFunction]]:
    for K in knots:
        for L in knots:
            yield K, L
