"""Staircase data of an L-space knot and the mirror (twisted) staircase complex.

Conventions
-----------
The positive staircase of ``L`` has generators ``s_0 .. s_{2d-2}`` in absolute
Alexander degree ``alpha_m`` (the exponents of the Alexander polynomial), and for
odd ``m``::

    d s_m = U^(alpha_{m-1} - alpha_m) s_{m-1} + s_{m+1}

The mirror complex is its dual: generators ``y*_m`` in degree ``-alpha_m`` and,
for even ``m``::

    d y*_m = U^(alpha_m - alpha_{m+1}) y*_{m+1} + y*_{m-1}

with out-of-range terms dropped.  The corner generators are ``y_k = y*_{2(k-1)}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConventionError, InvalidKnotData
from .semigroups import EnumeratingFunction

__all__ = [
    "MirrorStaircaseModel",
    "StaircaseDescriptor",
    "TowerChain",
    "mirror_model",
    "staircase_from_gamma",
    "tower_chain",
]


@dataclass(frozen=True)
class StaircaseDescriptor:
    """Corner data ``a_1 < ... < a_d`` and ``a'_k = delta - a_{d+1-k}``."""

    a: tuple[int, ...]
    a_prime: tuple[int, ...]
    delta: int

    def __post_init__(self):
        a, ap = tuple(self.a), tuple(self.a_prime)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "a_prime", ap)
        if not a or a[0] != 0 or a[-1] != self.delta:
            raise InvalidKnotData(f"a must run from 0 to delta={self.delta}, got {a}")
        if any(y <= x for x, y in zip(a, a[1:])):
            raise InvalidKnotData("a must be strictly increasing")
        if ap != tuple(self.delta - x for x in reversed(a)):
            raise InvalidKnotData("a_prime must equal delta - a reversed")

    @property
    def d(self) -> int:
        return len(self.a)

    @property
    def alpha(self) -> tuple[int, ...]:
        """Alexander exponents ``alpha_0 > ... > alpha_{2d-2}`` rebuilt from the corners."""
        a, ap, d = self.a, self.a_prime, self.d
        out = []
        for k in range(d):
            out.append(self.delta - a[k] - ap[k])
            if k + 1 < d:
                out.append(out[-1] - (ap[k + 1] - ap[k]))
        return tuple(out)

    def to_dict(self) -> dict:
        return {"d": self.d, "a": list(self.a), "a_prime": list(self.a_prime), "delta": self.delta}


def staircase_from_gamma(g: EnumeratingFunction) -> StaircaseDescriptor:
    """``a`` is the image of ``n -> Gamma(n) - n``.

    >>> from nuplus.semigroups import torus_semigroup
    >>> s = staircase_from_gamma(torus_semigroup(4, 5))
    >>> s.a, s.a_prime
    ((0, 3, 5, 6), (0, 1, 3, 6))
    """
    a = tuple(sorted({g(n) - n for n in range(g.delta + 1)}))
    s = StaircaseDescriptor(a, tuple(g.delta - x for x in reversed(a)), g.delta)
    for ak, apk in zip(s.a, s.a_prime):
        if g(apk) - apk != ak:
            raise ConventionError(f"duality Gamma(a'_k) - a'_k = a_k fails at a'_k={apk}")
    return s


@dataclass(frozen=True)
class MirrorStaircaseModel:
    """Dual staircase complex of ``mirror(L)``.

    ``differential[m]`` lists ``(target, u_power)`` pairs of ``d y*_m``.
    """

    alpha: tuple[int, ...]
    differential: tuple[tuple[tuple[int, int], ...], ...]
    corners: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.alpha)

    def alexander(self, m: int) -> int:
        return -self.alpha[m]

    @property
    def corner_degrees(self) -> tuple[int, ...]:
        return tuple(self.alexander(m) for m in self.corners)

    def boundary(self, chain) -> frozenset:
        """Boundary of a chain given as a set of ``(generator, u_power)`` terms over F2."""
        out: set = set()
        for m, u in chain:
            for t, h in self.differential[m]:
                out ^= {(t, u + h)}
        return frozenset(out)

    def squares_to_zero(self) -> bool:
        return all(not self.boundary(self.boundary({(m, 0)})) for m in range(self.size))

    def is_filtered(self) -> bool:
        # a term U^h y*_t sits in degree A(y*_t) - h
        return all(
            self.alexander(t) - h <= self.alexander(m)
            for m in range(self.size)
            for t, h in self.differential[m]
        )

    def tower_cycle(self, s: StaircaseDescriptor) -> frozenset:
        """The chain ``sum_k U^{a'_k} y_k``."""
        return frozenset((m, ap) for m, ap in zip(self.corners, s.a_prime))


def mirror_model(s: StaircaseDescriptor) -> MirrorStaircaseModel:
    alpha = s.alpha
    size = len(alpha)
    diff = []
    for m in range(size):
        terms = []
        if m % 2 == 0:
            if m + 1 < size:
                terms.append((m + 1, alpha[m] - alpha[m + 1]))
            if m >= 1:
                terms.append((m - 1, 0))
        diff.append(tuple(terms))
    model = MirrorStaircaseModel(alpha, tuple(diff), tuple(range(0, size, 2)))
    if model.boundary(model.tower_cycle(s)):
        raise ConventionError("sum of U^{a'_k} y_k is not a cycle")
    return model


@dataclass(frozen=True)
class TowerChain:
    """Summands ``x_{a'_k} (x) y_k`` of the tower chain with their Alexander degrees."""

    summands: tuple[tuple[int, int], ...]

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(deg for _, deg in self.summands)

    @property
    def M(self) -> int:
        return max(self.degrees)


def tower_chain(gK: EnumeratingFunction, sL: StaircaseDescriptor) -> TowerChain:
    """Degree of summand ``k`` is ``delta_K - Gamma_K(a'_k) + a_k + a'_k - delta_L``."""
    summands = tuple(
        (k + 1, gK.delta - gK(ap) + a + ap - sL.delta)
        for k, (a, ap) in enumerate(zip(sL.a, sL.a_prime))
    )
    return TowerChain(summands)
