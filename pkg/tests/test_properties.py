"""Randomized checks over staircase-shaped L-space knots, not only torus knots."""
from hypothesis import given, settings, strategies as st

from nuplus import (
    from_alexander,
    min_index_for,
    nu_plus_sum,
    staircase_from_gamma,
    subadditivity_check,
    to_alexander,
    tower_chain,
    v_sequence_oracle,
    v_sequence_sum,
    validate,
)
from nuplus.checks import counting_equivalence, random_lspace
from nuplus.nu_plus import positive_part

steps = st.lists(st.integers(1, 4), min_size=0, max_size=4)
knots = steps.map(random_lspace)
small_knots = st.lists(st.integers(1, 3), min_size=0, max_size=3).map(random_lspace)


@given(knots)
def test_gap_symmetry(g):
    assert validate(g).gap_symmetric
    gaps = set(g.gaps())
    assert len(gaps) == g.delta
    assert all((2 * g.delta - 1 - m in gaps) == (m not in gaps) for m in range(2 * g.delta))


@given(knots)
def test_alexander_round_trip(g):
    assert from_alexander(to_alexander(g)) == g
    assert to_alexander(g).evaluate(1) == 1


@given(knots, knots)
def test_v_sequence_unit_steps(K, L):
    v = v_sequence_sum(K, L).values
    assert all(b <= a <= b + 1 for a, b in zip(v, v[1:]))
    assert v[-1] == 0 and len(v) - 1 == nu_plus_sum(K, L)


@given(knots, knots)
def test_tower_chain_clamp(K, L):
    assert positive_part(tower_chain(K, staircase_from_gamma(L)).M) == nu_plus_sum(K, L)


@given(knots, knots)
def test_min_index_zero_is_nu(K, L):
    assert min_index_for(K, L, 0) == nu_plus_sum(K, L)


@given(knots, knots)
def test_subadditivity(K, L):
    assert subadditivity_check(K, L)


@given(knots, knots)
def test_counting_equivalence(K, L):
    assert counting_equivalence(K, L)


@settings(max_examples=40, deadline=None)
@given(small_knots, small_knots)
def test_oracle_equivalence(K, L):
    assert v_sequence_oracle(K, staircase_from_gamma(L)) == v_sequence_sum(K, L)
