"""Acceptance criteria, one check per criterion.

Each check prints a ``PASS``/``FAIL`` line. Run under pytest (the lines show up
even with output capture on) or directly::

    python tests/test_acceptance.py
"""
from fractions import Fraction

import pytest

from nuplus import (
    cobordism_genus_bound,
    gordian_bound,
    nu_plus_sum,
    semicontinuity,
    surgery_d_invariants,
    torus_semigroup as T,
    unknot,
    v_sequence_single,
)
from nuplus.checks import (
    oracle_mismatches,
    oracle_pairs,
    pretzel_12n242,
    property_failures,
    torus_grid,
    truncation_dependent,
)
from nuplus.cli import main
from nuplus.tables import family_p_values


def criterion_1():
    K, L = T(3, 7), T(4, 5)
    return nu_plus_sum(K, L) == 1 and nu_plus_sum(L, K) == 1


def criterion_2():
    P = pretzel_12n242()
    return [P(n) for n in range(8)] == [0, 3, 5, 7, 8, 10, 11, 12] and P.semigroup_closed is False


def criterion_3():
    K, L = T(6, 7), T(4, 9)
    r = semicontinuity(K, L)
    return (
        nu_plus_sum(K, L) == 4
        and r.obstructed
        and r.genus_budget == 3
        and r.nu_kl == 4
        and r.witness.get("n") == 8
    )


def criterion_4():
    for p in (11, 17, 23, 29):
        K, L = T(2 * p + 4, 3 * p), T(2 * p, 3 * p + 6)
        got = (nu_plus_sum(K, L), nu_plus_sum(L, K), cobordism_genus_bound(K, L), gordian_bound(K, L))
        if got != (7, 7, 7, 14):
            return False
    return True


def criterion_5():
    for q, r in ((2, 3), (2, 5), (3, 4), (3, 5)):
        for p in family_p_values(q, r):
            K, L = T(q * (p + 2), r * p), T(q * p, r * (p + 2))
            target = 2 * q * r - q - r
            if (nu_plus_sum(K, L), nu_plus_sum(L, K), K.delta - L.delta) != (target, target, r - q):
                return False
    return True


def criterion_6():
    pairs = oracle_pairs(60)
    return len(pairs) == 1606 and not oracle_mismatches(pairs) and not truncation_dependent(pairs)


def criterion_7():
    fails = property_failures(torus_grid(60) + [pretzel_12n242()])
    return not any(fails.values())


def criterion_8():
    U = unknot()
    return (
        surgery_d_invariants(v_sequence_single(T(2, 3)), 1) == (Fraction(-2),)
        and surgery_d_invariants(v_sequence_single(U), 1) == (Fraction(0),)
        and surgery_d_invariants(v_sequence_single(U), 2) == (Fraction(1, 4), Fraction(-1, 4))
    )


def criterion_9():
    return main(["tables", "--csv"]) == 0


CRITERIA = {
    1: ("nu+ of T(3,7)/T(4,5) both ways is 1", criterion_1),
    2: ("12n242 enumerating function and non-closure", criterion_2),
    3: ("T(6,7) -> T(4,9): nu+ 4, obstructed, budget 3, witness n=8", criterion_3),
    4: ("p-family: nu+ 7/7, genus bound 7, Gordian bound 14", criterion_4),
    5: ("general family: nu+ = 2qr-q-r both ways, delta gap r-q", criterion_5),
    6: ("oracle = closed form on 1606 pairs, stable under doubling N", criterion_6),
    7: ("property suites over the torus grid", criterion_7),
    8: ("surgery d-invariant spot checks", criterion_8),
    9: ("tables command exits 0 with every row PASS", criterion_9),
}


def report(number: int, ok: bool) -> str:
    return f"{'PASS' if ok else 'FAIL'}  criterion {number}: {CRITERIA[number][0]}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok = CRITERIA[number][1]()
    capsys.readouterr()  # drop anything the check itself printed
    with capsys.disabled():
        print("\n" + report(number, ok))
    assert ok


if __name__ == "__main__":
    import contextlib
    import io
    import sys

    results = []
    for n in sorted(CRITERIA):
        with contextlib.redirect_stdout(io.StringIO()):
            ok = CRITERIA[n][1]()
        results.append(ok)
        print(report(n, ok))
    sys.exit(0 if all(results) else 1)
