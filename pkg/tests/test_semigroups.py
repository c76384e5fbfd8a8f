import math

import pytest

from conftest import brute_image
from nuplus import (
    AlexanderVector,
    EnumeratingFunction,
    InvalidKnotData,
    counting,
    enumerate_value,
    from_alexander,
    from_generators,
    to_alexander,
    torus_semigroup,
    unknot,
    validate,
)
from nuplus.semigroups import validate_prefix


@pytest.mark.parametrize("p,q", [(3, 7), (2, 3), (4, 5), (6, 7), (4, 9), (26, 33)])
def test_torus_semigroup_matches_enumeration(p, q):
    g = torus_semigroup(p, q)
    image = brute_image((p, q), 2 * g.delta + 5)
    assert [g(n) for n in range(len(image))] == image
    assert g.delta == (p - 1) * (q - 1) // 2
    assert g.semigroup_closed


def test_torus_examples():
    assert torus_semigroup(3, 7).prefix == (0, 3, 6, 7, 9, 10, 12)
    assert torus_semigroup(2, 3).prefix == (0, 2)
    g = torus_semigroup(4, 5)
    assert (g(1), g(2), g(3), g.delta) == (4, 5, 8, 6)


@pytest.mark.parametrize("p,q", [(2, 4), (6, 9), (1, 5), (3, 1), (0, 7)])
def test_torus_rejects(p, q):
    with pytest.raises(InvalidKnotData):
        torus_semigroup(p, q)


def test_from_generators_examples():
    assert from_generators({1}) == unknot()
    g = from_generators({6, 7})
    assert g.delta == 15
    assert g.prefix[:7] == (0, 6, 7, 12, 13, 14, 18)
    g = from_generators({4, 9})
    assert g.delta == 12
    assert g.prefix[:7] == (0, 4, 8, 9, 12, 13, 16)


def test_from_generators_rejects_gcd_and_asymmetric():
    with pytest.raises(InvalidKnotData, match="gcd"):
        from_generators({4, 6})
    # <3,4,5> has gaps {1,2}: not symmetric, so no knot has it
    with pytest.raises(InvalidKnotData, match="not symmetric"):
        from_generators({3, 4, 5})


def test_from_generators_more_than_two():
    # <4,6,13> is symmetric (a plane-curve semigroup)
    g = from_generators({4, 6, 13})
    assert list(g.prefix[:-1]) == [x for x in brute_image((4, 6, 13), 2 * g.delta) if x < 2 * g.delta]
    assert validate(g).ok


def test_pretzel_from_alexander(pretzel):
    assert [pretzel(n) for n in range(8)] == [0, 3, 5, 7, 8, 10, 11, 12]
    assert pretzel.delta == 5
    assert pretzel.semigroup_closed is False


def test_from_alexander_trefoil_and_unknot():
    # (1 - t + t^2) / (1 - t) = 1 + t^2 + t^3 + ...
    assert from_alexander(AlexanderVector((1, 0, -1))) == torus_semigroup(2, 3)
    assert from_alexander(AlexanderVector((0,))) == unknot()


def test_alexander_dense_form():
    v = AlexanderVector.from_coefficients([1, -1, 1], lowest=-1)
    assert v.exponents == (1, 0, -1)
    with pytest.raises(InvalidKnotData, match="not an L-space-knot polynomial"):
        # 2 - 3t + 2t^2 (figure-eight up to sign) is not a staircase polynomial
        AlexanderVector.from_coefficients([-1, 3, -1], lowest=-1)
    with pytest.raises(InvalidKnotData, match="not an L-space-knot polynomial"):
        AlexanderVector.from_coefficients([1, -2, 1, 1], lowest=-1)


@pytest.mark.parametrize("exps", [(1, 0), (1, 1, -1), (2, 0, -1), (0, 1, -1)])
def test_alexander_vector_rejects(exps):
    with pytest.raises(InvalidKnotData):
        AlexanderVector(exps)


def test_alexander_evaluates_to_one(pretzel):
    assert to_alexander(pretzel).evaluate(1) == 1


def test_to_alexander_examples(pretzel):
    assert to_alexander(torus_semigroup(4, 5)).exponents == (6, 5, 2, 0, -2, -5, -6)
    assert to_alexander(unknot()).exponents == (0,)
    x = AlexanderVector((5, 4, 2, 1, 0, -1, -2, -4, -5))
    assert to_alexander(from_alexander(x)) == x


def test_enumerate_value():
    g = torus_semigroup(3, 7)
    assert enumerate_value(g, 3) == 7
    assert enumerate_value(g, 0) == 0
    assert enumerate_value(torus_semigroup(26, 33), 2) == 33
    assert enumerate_value(torus_semigroup(22, 39), 2) == 39
    assert g(100) == 106


def test_counting_examples():
    assert counting(torus_semigroup(6, 7), 8) == 3
    assert counting(torus_semigroup(4, 9), 8) == 2
    assert counting(torus_semigroup(3, 7), -5) == 0
    assert counting(torus_semigroup(3, 7), 0) == 0


def test_counting_against_enumeration():
    g = torus_semigroup(5, 7)
    image = brute_image((5, 7), 80)
    for n in range(-3, 80):
        assert counting(g, n) == sum(1 for s in image if s < n)


def test_validate_reports():
    d = validate(torus_semigroup(3, 7))
    assert d.ok and d.semigroup_closed and d.problems == ()
    assert validate(unknot()).ok


def test_validate_pretzel_closure(pretzel):
    d = validate(pretzel)
    assert d.gap_symmetric and d.ok
    assert not d.semigroup_closed
    assert "3 + 3 = 6" in d.problems[0]


def test_validate_prefix_flags_bad_data():
    assert not validate_prefix((0, 2, 3), 2).gap_symmetric  # image {0,2,3}: 0 and 3 both present
    assert not validate_prefix((0, 3, 2), 1).monotone
    assert not validate_prefix((0, 3), 1).tail_rule
    assert not validate_prefix((0,), 2).ok


def test_constructor_rejects_invalid_and_inconsistent_flag():
    with pytest.raises(InvalidKnotData):
        EnumeratingFunction(2, (0, 2, 3))
    with pytest.raises(InvalidKnotData, match="contradicts"):
        EnumeratingFunction(6, torus_semigroup(3, 7).prefix, semigroup_closed=False)


def test_serialization_round_trip(pretzel):
    for g in (pretzel, torus_semigroup(4, 5), unknot()):
        d = g.to_dict()
        assert set(d) == {"label", "delta", "prefix", "semigroup_closed"}
        assert EnumeratingFunction.from_dict(d) == g


def test_tail_rule_and_counting_identities():
    for p in range(2, 15):
        for q in range(p + 1, 200 // p + 1):
            if math.gcd(p, q) != 1:
                continue
            g = torus_semigroup(p, q)
            gaps = [x for x in range(2 * g.delta + 2) if x not in set(brute_image((p, q), 2 * g.delta + 2))]
            assert len(gaps) == g.delta == (p - 1) * (q - 1) // 2
            for n in range(g.delta, 3 * g.delta + 5):
                assert g(n) == n + g.delta
            for m in range(2 * g.delta + 1):
                assert counting(g, g(m) + 1) == m + 1
                assert counting(g, g(m)) == m
