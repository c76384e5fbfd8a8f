"""Reference values as a table of computed-vs-expected rows."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import checks
from .nu_plus import nu_plus_sum, surgery_d_invariants, v_sequence_single
from .obstructions import cobordism_genus_bound, gordian_bound, semicontinuity
from .semigroups import torus_semigroup as T, unknot


@dataclass(frozen=True)
class Row:
    name: str
    computed: object
    expected: object

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def to_dict(self) -> dict:
        return {
            "row": self.name,
            "computed": _plain(self.computed),
            "expected": _plain(self.expected),
            "status": "PASS" if self.passed else "FAIL",
        }


def _plain(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (tuple, list)):
        return [_plain(y) for y in x]
    return x


def family_p_values(q: int, r: int, count: int = 2) -> list[int]:
    """Smallest ``p`` with ``p = -1 mod 2qr`` and ``p >= 2qr - 1``."""
    m = 2 * q * r
    return [m * k - 1 for k in range(1, count + 1)]


def small_rows() -> list[Row]:
    rows = []
    K1, K2 = T(3, 7), T(4, 5)
    rows.append(Row("nu(T37#mT45)", nu_plus_sum(K1, K2), 1))
    rows.append(Row("nu(T45#mT37)", nu_plus_sum(K2, K1), 1))

    P = checks.pretzel_12n242()
    rows.append(Row("12n242 Gamma(0..7)", tuple(P(n) for n in range(8)), (0, 3, 5, 7, 8, 10, 11, 12)))
    rows.append(Row("12n242 semigroup_closed", P.semigroup_closed, False))

    K, L = T(6, 7), T(4, 9)
    rep = semicontinuity(K, L)
    rows.append(Row("nu(T67#mT49)", nu_plus_sum(K, L), 4))
    rows.append(Row("deform T67->T49 verdict", rep.verdict, "obstructed"))
    rows.append(Row("deform T67->T49 genus budget vs bound", rep.witness.get("genus_bound"), [4, 3]))
    rows.append(Row("deform T67->T49 semicontinuity witness n", rep.witness.get("n"), 8))
    return rows


def p_family_rows() -> list[Row]:
    rows = []
    for p in (11, 17, 23, 29):
        K, L = T(2 * p + 4, 3 * p), T(2 * p, 3 * p + 6)
        tag = f"p={p} family"
        rows.append(Row(f"{tag} nu(K#mL), nu(L#mK)", (nu_plus_sum(K, L), nu_plus_sum(L, K)), (7, 7)))
        rows.append(Row(f"{tag} genus bound", cobordism_genus_bound(K, L), 7))
        rows.append(Row(f"{tag} Gordian bound", gordian_bound(K, L), 14))
        rows.append(Row(f"{tag} 2delta_K, 2delta_L", (2 * K.delta, 2 * L.delta),
                        (6 * p * p + 7 * p - 3, 6 * p * p + 7 * p - 5)))
        rows.append(Row(f"{tag} Gamma_K(2), Gamma_L(2)", (K(2), L(2)), (3 * p, 3 * p + 6)))
        rows.append(Row(f"{tag} Gamma_K(3), Gamma_L(3)", (K(3), L(3)), (4 * p + 8, 4 * p)))
    return rows


def general_family_rows() -> list[Row]:
    rows = []
    for q, r in ((2, 3), (2, 5), (3, 4), (3, 5)):
        for p in family_p_values(q, r):
            K, L = T(q * (p + 2), r * p), T(q * p, r * (p + 2))
            target = 2 * q * r - q - r
            tag = f"(q,r)=({q},{r}), p={p}"
            rows.append(Row(f"{tag} nu both ways", (nu_plus_sum(K, L), nu_plus_sum(L, K)), (target, target)))
            rows.append(Row(f"{tag} delta_K - delta_L", K.delta - L.delta, r - q))
    return rows


def surgery_rows() -> list[Row]:
    return [
        Row("d(S3_1(T23))", surgery_d_invariants(v_sequence_single(T(2, 3)), 1), (Fraction(-2),)),
        Row("d(S3_1(U))", surgery_d_invariants(v_sequence_single(unknot()), 1), (Fraction(0),)),
        Row("d(S3_2(U))", surgery_d_invariants(v_sequence_single(unknot()), 2), (Fraction(1, 4), Fraction(-1, 4))),
    ]


def grid_rows() -> list[Row]:
    pairs = checks.oracle_pairs(60)
    rows = [
        Row(f"oracle = formula on {len(pairs)} ordered pairs", checks.oracle_mismatches(pairs), []),
        Row("oracle independent of doubling N (5 pairs)", checks.truncation_dependent(pairs), []),
    ]
    fails = checks.property_failures(checks.torus_grid(60) + [checks.pretzel_12n242()])
    rows += [Row(f"property: {name}", bad, []) for name, bad in fails.items()]
    return rows


def reference_tables(include_grid: bool = True) -> list[Row]:
    rows = small_rows() + p_family_rows() + general_family_rows() + surgery_rows()
    if include_grid:
        rows += grid_rows()
    return rows
