"""Closed formulas for nu+ and the V-sequence of ``K # mirror(L)`` for L-space knots."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import PreconditionError
from .semigroups import EnumeratingFunction, unknot

__all__ = [
    "VSequence",
    "min_index_for",
    "nu_plus_sum",
    "positive_part",
    "surgery_d_invariants",
    "unclamped_nu",
    "v_sequence_single",
    "v_sequence_sum",
]


def positive_part(x: int) -> int:
    """``max(x, 0)``."""
    return x if x > 0 else 0


@dataclass(frozen=True)
class VSequence:
    """``V_0 >= V_1 >= ... >= V_t = 0``; entries past the end are 0."""

    values: tuple[int, ...]

    def __post_init__(self):
        v = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", v)
        if not v or v[-1] != 0:
            raise ValueError(f"a V-sequence must end with 0, got {v}")
        if any(x < 0 for x in v):
            raise ValueError("V-sequence entries must be non-negative")
        if any(not (b <= a <= b + 1) for a, b in zip(v, v[1:])):
            raise ValueError(f"V-sequence must be non-increasing with unit steps, got {v}")
        if 0 in v[:-1]:
            raise ValueError("only the last stored entry may be 0")

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("V is indexed by non-negative integers")
        return self.values[i] if i < len(self.values) else 0

    @property
    def nu_plus(self) -> int:
        return len(self.values) - 1

    def to_dict(self) -> dict:
        return {"values": list(self.values), "nu_plus": self.nu_plus}


def _scan_bound(gK: EnumeratingFunction, gL: EnumeratingFunction, max_n: Optional[int]) -> int:
    # beyond max(delta_K, delta_L) both Gammas follow n + delta, so the objective is constant
    bound = max(gK.delta, gL.delta)
    return bound if max_n is None else max(bound, max_n)


def _raw_index(gK: EnumeratingFunction, gL: EnumeratingFunction, m: int, max_n: Optional[int] = None) -> int:
    """``delta_K - delta_L + max_n (Gamma_L(n) - Gamma_K(n + m))`` before clamping."""
    B = _scan_bound(gK, gL, max_n)
    diff = gL.values(B) - gK.values(B + m)[m:]
    return gK.delta - gL.delta + int(diff.max())


def unclamped_nu(gK: EnumeratingFunction, gL: EnumeratingFunction, max_n: Optional[int] = None) -> int:
    return _raw_index(gK, gL, 0, max_n)


def nu_plus_sum(gK: EnumeratingFunction, gL: EnumeratingFunction, max_n: Optional[int] = None) -> int:
    """``nu+(K # mirror L) = (g(K) - g(L) + max_n {Gamma_L(n) - Gamma_K(n)})_+``.

    >>> from nuplus.semigroups import torus_semigroup as T
    >>> nu_plus_sum(T(3, 7), T(4, 5)), nu_plus_sum(T(4, 5), T(3, 7))
    (1, 1)
    """
    return positive_part(unclamped_nu(gK, gL, max_n))


def _v0(gK: EnumeratingFunction, gL: EnumeratingFunction, max_n: Optional[int]) -> int:
    # the raw index is non-increasing in m and vanishes by m = delta_K
    m = 0
    while positive_part(_raw_index(gK, gL, m, max_n)) > 0:
        m += 1
    return m


def min_index_for(gK: EnumeratingFunction, gL: EnumeratingFunction, m: int, max_n: Optional[int] = None) -> int:
    """``min{i : V_i(K # mirror L) = m}``, valid for ``0 <= m <= V_0``."""
    if m < 0:
        raise PreconditionError(f"m must be non-negative, got {m}")
    v0 = _v0(gK, gL, max_n)
    if m > v0:
        raise PreconditionError(f"m={m} exceeds V_0={v0}; the formula only holds for m <= V_0")
    return positive_part(_raw_index(gK, gL, m, max_n))


def v_sequence_sum(gK: EnumeratingFunction, gL: EnumeratingFunction, max_n: Optional[int] = None) -> VSequence:
    """V-sequence of ``K # mirror L``, by inverting :func:`min_index_for`.

    ``V_i = min{m : min_index_for(m) <= i}``.
    """
    v0 = _v0(gK, gL, max_n)
    first = [positive_part(_raw_index(gK, gL, m, max_n)) for m in range(v0 + 1)]
    nu = first[0]
    values = [min(m for m in range(v0 + 1) if first[m] <= i) for i in range(nu + 1)]
    return VSequence(tuple(values))


def v_sequence_single(gK: EnumeratingFunction) -> VSequence:
    """V-sequence of ``K`` itself (the case ``L`` = unknot); its nu+ is ``delta_K``."""
    return v_sequence_sum(gK, unknot())


def surgery_d_invariants(vK: VSequence, n: int) -> tuple[Fraction, ...]:
    """Correction terms ``d(S^3_n(K), t_i)`` for ``i = 0..n-1``, in the shifted grading.

    ``d = -2 max(V_i, V_{n-i}) + ((n - 2i)^2 - n) / (4n)``.
    """
    if n <= 0:
        raise PreconditionError(f"only positive integral surgeries are supported, got n={n}")
    return tuple(
        -2 * max(vK[i], vK[n - i]) + Fraction((n - 2 * i) ** 2 - n, 4 * n) for i in range(n)
    )


def fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def gamma_difference(gK: EnumeratingFunction, gL: EnumeratingFunction) -> np.ndarray:
    """``Gamma_L(n) - Gamma_K(n)`` on the lossless scan range."""
    B = _scan_bound(gK, gL, None)
    return gL.values(B) - gK.values(B)
