import pytest

from nuplus import (
    ConventionError,
    PreconditionError,
    build_tensor_complex,
    staircase_from_gamma as S,
    sublevel,
    torus_semigroup as T,
    tower_chain,
    unknot,
    v_at,
    v_sequence_oracle,
    v_sequence_single,
    v_sequence_sum,
)
from nuplus.oracle import FilteredUComplex, min_truncation


def test_unknot_complex(U):
    c = build_tensor_complex(U, S(U), 8)
    assert len(c) == 8
    assert all(not b for b in c.boundary)
    assert [c.level(n, 0) for n in range(8)] == [-n for n in range(8)]


def test_complex_sizes_and_levels(U):
    c = build_tensor_complex(T(3, 7), S(T(4, 5)), 32)
    assert len(c) == 7 * 32
    g = T(2, 3)
    c = build_tensor_complex(g, S(U), 16)
    assert [c.level(n, 0) for n in range(16)] == [1 - g(n) for n in range(16)]


def test_truncation_floor():
    with pytest.raises(PreconditionError):
        build_tensor_complex(T(3, 7), S(T(4, 5)), 31)
    assert min_truncation(T(3, 7), S(T(4, 5))) == 32


@pytest.mark.parametrize("k,l", [((3, 7), (4, 5)), ((2, 5), (3, 4)), ((6, 7), (4, 9))])
def test_complex_invariants(k, l):
    c = build_tensor_complex(T(*k), S(T(*l)))
    assert c.squares_to_zero()
    assert c.is_filtered()
    assert c.u_commutes()
    # H(C / U^N) is F[U]/U^N
    assert c.homology_rank == c.N


def test_sublevel_extremes():
    c = build_tensor_complex(T(3, 7), S(T(4, 5)))
    assert len(sublevel(c, max(c.levels))) == len(c)
    assert len(sublevel(c, min(c.levels) - 1)) == 0


def test_sublevel_misses_tower_summand():
    K, sL = T(3, 7), S(T(4, 5))
    c = build_tensor_complex(K, sL)
    sub = sublevel(c, 0)
    summands = [(ap, 2 * k) for k, ap in enumerate(sL.a_prime)]
    missing = [lab for lab in summands if lab not in sub.index]
    assert missing
    assert all(c.level(*lab) == 1 for lab in missing)


def test_sublevel_detects_broken_filtration():
    # d e_1 = e_0 but e_0 sits above e_1: not a filtered complex
    bad = FilteredUComplex(((0, 1), (0, 0)), (1, 0), ((), (0,)), 8)
    with pytest.raises(ConventionError):
        sublevel(bad, 0)
    with pytest.raises(ConventionError):
        bad._order


def test_v_at_examples(U):
    c = build_tensor_complex(U, S(U), 8)
    assert v_at(c, 0) == 0
    c = build_tensor_complex(T(3, 7), S(T(4, 5)), 32)
    assert (v_at(c, 0), v_at(c, 1)) == (1, 0)
    c = build_tensor_complex(T(2, 3), S(U))
    assert v_at(c, 0) == v_sequence_single(T(2, 3))[0] == 1


def test_v_at_monotone_unit_steps():
    c = build_tensor_complex(T(6, 7), S(T(4, 9)))
    vals = [v_at(c, i) for i in range(-1, 8)]
    assert all(b <= a <= b + 1 for a, b in zip(vals, vals[1:]))
    with pytest.raises(PreconditionError):
        v_at(c, -2)


def test_v_sequence_oracle_examples(U):
    assert v_sequence_oracle(T(3, 7), S(T(4, 5)), 32).values == (1, 0)
    assert v_sequence_oracle(U, S(U), 8).values == (0,)
    assert v_sequence_oracle(T(6, 7), S(T(4, 9)), 64).nu_plus == 4


def test_oracle_matches_formula_small_grid(pretzel):
    knots = [unknot(), T(2, 3), T(2, 5), T(3, 4), T(3, 5), T(2, 7), pretzel]
    for K in knots:
        for L in knots:
            assert v_sequence_oracle(K, S(L)) == v_sequence_sum(K, L), (K.name, L.name)


def test_oracle_independent_of_N():
    K, sL = T(4, 7), S(T(3, 8))
    N = min_truncation(K, sL)
    assert v_sequence_oracle(K, sL, N) == v_sequence_oracle(K, sL, 2 * N) == v_sequence_oracle(K, sL, 3 * N)


@pytest.mark.parametrize("k,l", [((3, 7), (4, 5)), ((6, 7), (4, 9)), ((2, 9), (3, 5)), ((5, 6), (3, 8))])
def test_tower_chain_is_sharp(k, l):
    """The tower chain lies in the sublevel at M and the tower is missed one level below."""
    K, sL = T(*k), S(T(*l))
    c = build_tensor_complex(K, sL)
    M = tower_chain(K, sL).M
    z = [c.index[(ap, 2 * j)] for j, ap in enumerate(sL.a_prime)]
    assert c.is_cycle(z)
    assert c.u_order(z) == c.N  # z generates the tower
    assert max(c.levels[j] for j in z) == M
    assert c.birth(z) <= M
    assert v_at(c, M) == 0
    if M > 0:
        assert v_at(c, M - 1) > 0
