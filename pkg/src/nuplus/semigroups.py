"""Enumerating functions of L-space knots.

An L-space knot ``K`` has an enumerating function ``Gamma_K: N -> N``; for an
algebraic knot it lists the elements of the semigroup of the singularity in
increasing order.  ``Gamma(n) - n`` is non-decreasing and equals ``delta`` from
``n = delta`` on, so the values ``Gamma(0), ..., Gamma(delta)`` are all we store.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidKnotData

__all__ = [
    "AlexanderVector",
    "Diagnostics",
    "EnumeratingFunction",
    "counting",
    "enumerate_value",
    "from_alexander",
    "from_generators",
    "to_alexander",
    "torus_semigroup",
    "unknot",
    "validate",
    "validate_prefix",
]


@dataclass(frozen=True)
class Diagnostics:
    """Result of :func:`validate`. ``ok`` ignores closure, which is informational."""

    monotone: bool
    tail_rule: bool
    gap_symmetric: bool
    semigroup_closed: bool
    problems: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return self.monotone and self.tail_rule and self.gap_symmetric


def _membership(prefix: Sequence[int], delta: int) -> list[bool]:
    # membership of 0 .. 2*delta (inclusive); everything >= 2*delta is in the image
    top = 2 * delta
    mem = [False] * (top + 1)
    for v in prefix:
        if 0 <= v <= top:
            mem[v] = True
    return mem


def _closure_witness(mem: Sequence[bool], delta: int) -> Optional[tuple[int, int]]:
    """A pair of image elements whose sum below ``2*delta`` is missing, or None if closed.

    Sweeps upward, keeping the minimal generators met so far: an image element not
    generated by them is a new generator, and a generated non-element is a witness.
    Beyond ``2*delta`` everything is in the image, so sums there need no test.
    """
    bound = 2 * delta
    gens: list[int] = []
    generated = [True] + [False] * max(bound - 1, 0)
    for x in range(1, bound):
        hit = next((g for g in gens if generated[x - g]), None)
        if hit is not None:
            if not mem[x]:
                return hit, x - hit
            generated[x] = True
        elif mem[x]:
            gens.append(x)
            generated[x] = True
    return None


def _is_closed(mem: Sequence[bool], delta: int) -> bool:
    return _closure_witness(mem, delta) is None


def validate_prefix(prefix: Sequence[int], delta: int) -> Diagnostics:
    """Check raw ``(prefix, delta)`` data against the enumerating-function axioms."""
    problems = []
    prefix = list(prefix)
    if delta < 0:
        problems.append(f"delta must be non-negative, got {delta}")
        return Diagnostics(False, False, False, False, tuple(problems))
    if len(prefix) != delta + 1:
        problems.append(f"prefix must have delta+1 = {delta + 1} entries, got {len(prefix)}")
        return Diagnostics(False, False, False, False, tuple(problems))

    monotone = prefix[0] == 0 and all(b > a for a, b in zip(prefix, prefix[1:]))
    monotone = monotone and all(v >= n for n, v in enumerate(prefix))
    if not monotone:
        problems.append("Gamma must start at 0, be strictly increasing and satisfy Gamma(n) >= n")

    tail = prefix[-1] == 2 * delta
    if not tail:
        problems.append(f"Gamma(delta) must equal 2*delta = {2 * delta}, got {prefix[-1]}")

    mem = _membership(prefix, delta)
    # with the tail rule, the image below 2*delta is exactly prefix[:-1]
    symmetric = tail and all(mem[m] != mem[2 * delta - 1 - m] for m in range(2 * delta))
    if not symmetric:
        problems.append("gap symmetry fails: m in image must be equivalent to 2*delta-1-m not in image")

    closed = _is_closed(mem, delta)
    return Diagnostics(monotone, tail, symmetric, closed, tuple(problems))


@dataclass(frozen=True)
class EnumeratingFunction:
    """The enumerating function of an L-space knot.

    Parameters
    ----------
    delta : int
        Number of gaps of the image; equals the Seifert genus.
    prefix : tuple of int
        ``Gamma(0), ..., Gamma(delta)``.  Later values follow ``Gamma(n) = n + delta``.
    semigroup_closed : bool, optional
        Whether the image is closed under addition.  Computed when omitted;
        a supplied value that disagrees with the data is rejected.
    label : str, optional
        Display name.
    """

    delta: int
    prefix: tuple[int, ...]
    semigroup_closed: Optional[bool] = None
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(v) for v in self.prefix))
        diag = validate_prefix(self.prefix, self.delta)
        if not diag.ok:
            raise InvalidKnotData("; ".join(diag.problems))
        if self.semigroup_closed is None:
            object.__setattr__(self, "semigroup_closed", diag.semigroup_closed)
        elif bool(self.semigroup_closed) != diag.semigroup_closed:
            raise InvalidKnotData(
                f"semigroup_closed={self.semigroup_closed} contradicts the data "
                f"(closure check gives {diag.semigroup_closed})"
            )

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("Gamma is defined on non-negative integers")
        if n <= self.delta:
            return self.prefix[n]
        return n + self.delta

    @property
    def genus(self) -> int:
        return self.delta

    @property
    def name(self) -> str:
        return self.label or f"G[{','.join(map(str, self.prefix))};{self.delta}]"

    def values(self, upto: int) -> np.ndarray:
        """``Gamma(0..upto)`` as an int64 array."""
        n = np.arange(upto + 1, dtype=np.int64)
        out = n + self.delta
        k = min(upto, self.delta) + 1
        out[:k] = self._prefix_array[:k]
        return out

    @cached_property
    def _prefix_array(self) -> np.ndarray:
        return np.asarray(self.prefix, dtype=np.int64)

    def __contains__(self, x: int) -> bool:
        if x < 0:
            return False
        if x >= 2 * self.delta:
            return True
        i = bisect.bisect_left(self.prefix, x)
        return i < len(self.prefix) and self.prefix[i] == x

    def gaps(self) -> tuple[int, ...]:
        image = set(self.prefix)
        return tuple(x for x in range(2 * self.delta) if x not in image)

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "delta": self.delta,
            "prefix": list(self.prefix),
            "semigroup_closed": self.semigroup_closed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "EnumeratingFunction":
        return cls(
            delta=int(data["delta"]),
            prefix=tuple(data["prefix"]),
            semigroup_closed=data.get("semigroup_closed"),
            label=data.get("label"),
        )


def unknot() -> EnumeratingFunction:
    return EnumeratingFunction(0, (0,), True, "U")


def _from_membership(mem: Sequence[bool], label: Optional[str]) -> EnumeratingFunction:
    """Build from membership of ``0..B`` where ``B`` is at least the conductor."""
    delta = sum(1 for x in mem if not x)
    image = [x for x, m in enumerate(mem) if m]
    prefix = image[: delta + 1]
    while len(prefix) < delta + 1:
        prefix.append(len(prefix) + delta)
    return EnumeratingFunction(delta, tuple(prefix), label=label)


def _generate(gens: Sequence[int]) -> list[bool]:
    # sieve until min(gens) consecutive members appear; from there on all integers are members
    g0 = min(gens)
    mem = [True]
    run = 1
    x = 0
    while run < g0:
        x += 1
        inside = any(x >= g and mem[x - g] for g in gens)
        mem.append(inside)
        run = run + 1 if inside else 0
    # trim the trailing run down to one element past the last gap
    last_gap = max((i for i, m in enumerate(mem) if not m), default=-1)
    return mem[: last_gap + 2]


def from_generators(gens: Iterable[int], label: Optional[str] = None) -> EnumeratingFunction:
    """Enumerating function of the numerical semigroup generated by ``gens``.

    Only symmetric semigroups are accepted, since those are the ones that
    arise from knots.

    >>> from_generators({4, 9}).prefix[:7]
    (0, 4, 8, 9, 12, 13, 16)
    """
    gens = sorted({int(g) for g in gens})
    if not gens or gens[0] < 1:
        raise InvalidKnotData("generators must be positive integers")
    if reduce(math.gcd, gens) != 1:
        raise InvalidKnotData(f"gcd of generators {gens} is not 1; the complement would be infinite")
    mem = _generate(gens)
    try:
        return _from_membership(mem, label or "S{" + ",".join(map(str, gens)) + "}")
    except InvalidKnotData as exc:
        raise InvalidKnotData(
            f"semigroup generated by {gens} is not symmetric, so it is not the semigroup of a knot ({exc})"
        ) from None


def torus_semigroup(p: int, q: int) -> EnumeratingFunction:
    """Semigroup ``<p, q>`` of the torus knot ``T(p, q)``."""
    if p < 2 or q < 2:
        raise InvalidKnotData(f"torus knot parameters must be >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise InvalidKnotData(f"T({p},{q}) is a link: gcd({p},{q}) = {math.gcd(p, q)}")
    g = from_generators((p, q), label=f"T({p},{q})")
    expected = (p - 1) * (q - 1) // 2
    if g.delta != expected:
        raise AssertionError(f"generated delta {g.delta} != (p-1)(q-1)/2 = {expected}")
    return g


@dataclass(frozen=True)
class AlexanderVector:
    """Symmetrized Alexander polynomial of an L-space knot.

    ``exponents`` are strictly decreasing; the coefficient of ``t**exponents[m]``
    is ``(-1)**m``.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        e = tuple(int(x) for x in self.exponents)
        object.__setattr__(self, "exponents", e)
        if len(e) % 2 == 0:
            raise InvalidKnotData(f"need an odd number of exponents, got {len(e)}")
        if any(b >= a for a, b in zip(e, e[1:])):
            raise InvalidKnotData("exponents must be strictly decreasing")
        if any(e[m] != -e[-1 - m] for m in range(len(e))):
            raise InvalidKnotData("exponents are not symmetric about 0")

    @property
    def delta(self) -> int:
        return self.exponents[0]

    def coefficients(self) -> dict[int, int]:
        return {a: (-1) ** m for m, a in enumerate(self.exponents)}

    def evaluate(self, t):
        return sum(c * t**a for a, c in self.coefficients().items())

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], lowest: int) -> "AlexanderVector":
        """Dense form: ``coeffs[k]`` is the coefficient of ``t**(lowest + k)``."""
        partial = 0
        for k, c in enumerate(coeffs):
            partial += c
            if partial not in (0, 1):
                raise InvalidKnotData(
                    f"not an L-space-knot polynomial: partial coefficient sum {partial} "
                    f"at degree {lowest + k}"
                )
        if partial != 1:
            raise InvalidKnotData(f"not an L-space-knot polynomial: value at t=1 is {partial}")
        exps = [lowest + k for k, c in enumerate(coeffs) if c]
        return cls(tuple(reversed(exps)))


def from_alexander(poly: AlexanderVector, label: Optional[str] = None) -> EnumeratingFunction:
    """Enumerating function whose image has generating series ``t**delta * Delta(t) / (1 - t)``.

    The 12n242 polynomial gives values ``0, 3, 5, 7, 8, 10, ...``:

    >>> from_alexander(AlexanderVector((5, 4, 2, 1, 0, -1, -2, -4, -5))).prefix
    (0, 3, 5, 7, 8, 10)
    """
    delta = poly.delta
    # lowest-degree term first, shifted so the lowest degree is 0
    shifted = [(a + delta, c) for a, c in sorted(poly.coefficients().items())]
    mem = [False] * (2 * delta + 1)
    partial = 0
    it = iter(shifted)
    nxt = next(it, None)
    for deg in range(2 * delta + 1):
        while nxt is not None and nxt[0] == deg:
            partial += nxt[1]
            nxt = next(it, None)
        if partial not in (0, 1):
            raise InvalidKnotData(f"not an L-space-knot polynomial (partial sum {partial} at degree {deg})")
        mem[deg] = partial == 1
    return _from_membership(mem, label or "A[" + ",".join(map(str, poly.exponents)) + "]")


def to_alexander(g: EnumeratingFunction) -> AlexanderVector:
    """Inverse of :func:`from_alexander`: expand ``(1 - t) * sum_{s in image} t**s``."""
    top = 2 * g.delta
    exps = []
    prev = False
    for k in range(top + 1):
        cur = k in g
        if cur != prev:
            exps.append(k - g.delta)
        prev = cur
    return AlexanderVector(tuple(reversed(exps)))


def enumerate_value(g: EnumeratingFunction, n: int) -> int:
    """``Gamma(n)``; same as ``g(n)``."""
    return g(n)


def counting(g: EnumeratingFunction, n: int) -> int:
    """``R(n) = #([0, n) & image)``, with ``R(n) = 0`` for ``n <= 0``."""
    if n <= 0:
        return 0
    if n > 2 * g.delta:
        return n - g.delta
    return bisect.bisect_left(g.prefix, n)


def validate(g: EnumeratingFunction) -> Diagnostics:
    diag = validate_prefix(g.prefix, g.delta)
    if not diag.semigroup_closed:
        a, b = _closure_witness(_membership(g.prefix, g.delta), g.delta)
        diag = Diagnostics(
            diag.monotone,
            diag.tail_rule,
            diag.gap_symmetric,
            False,
            diag.problems + (f"not closed under addition: {a} + {b} = {a + b} is missing",),
        )
    return diag
