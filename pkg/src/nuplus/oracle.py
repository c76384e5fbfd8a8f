"""Brute-force V-sequences from the filtered complex ``reduced(K) (x) mirror-staircase(L)``.

The reduced complex of an L-space knot ``K`` is ``F[U] x`` with zero differential
and ``x_n = U^n x`` in Alexander degree ``delta_K - Gamma_K(n)``.  Tensoring over
``F[U]`` with the mirror staircase and truncating at ``U^N`` gives a finite complex
with basis ``e_{n,m} = x_n (x) y*_m``, ``0 <= n < N``.

Filtration level of ``e_{n,m}`` is ``delta_K - Gamma_K(n) - alpha_m``.  A general
element ``x_a (x) U^b y*_m`` with ``a + b = n`` has degree
``delta_K - Gamma_K(a) - b - alpha_m``.  The induced filtration takes the minimum
over splittings, and since ``Gamma_K(a) - a`` is non-decreasing the minimum is at
``a = n``, which gives the rule above.

``V_i`` is the least ``v`` such that ``U^v`` times the tower generator lies in the
image of ``H(A_i) -> H(C)``, where ``A_i`` is the sublevel ``level <= i``.  The image
is read off from one persistence reduction of the boundary matrix over F2.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .errors import ConventionError, PreconditionError, TruncationError
from .nu_plus import VSequence
from .semigroups import EnumeratingFunction
from .staircase import StaircaseDescriptor, mirror_model

__all__ = [
    "FilteredUComplex",
    "build_tensor_complex",
    "min_truncation",
    "sublevel",
    "v_at",
    "v_sequence_oracle",
]


def min_truncation(gK: EnumeratingFunction, sL: StaircaseDescriptor) -> int:
    return 2 * (gK.delta + sL.delta) + 8


@dataclass(frozen=True, eq=False)
class FilteredUComplex:
    """Finite filtered complex over F2 with a nilpotent ``U``.

    Basis element ``j`` is labelled ``labels[j] = (n, m)`` (U-power, mirror generator);
    ``boundary[j]`` is the tuple of basis indices in ``d e_j``.
    """

    labels: tuple[tuple[int, int], ...]
    levels: tuple[int, ...]
    boundary: tuple[tuple[int, ...], ...]
    N: int

    @cached_property
    def index(self) -> dict[tuple[int, int], int]:
        return {lab: j for j, lab in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.labels)

    def level(self, n: int, m: int) -> int:
        return self.levels[self.index[(n, m)]]

    def u_image(self, j: int) -> Optional[int]:
        n, m = self.labels[j]
        return self.index.get((n + 1, m))

    # --- invariant checks -------------------------------------------------
    def squares_to_zero(self) -> bool:
        for j in range(len(self)):
            acc: set = set()
            for t in self.boundary[j]:
                acc ^= set(self.boundary[t])
            if acc:
                return False
        return True

    def is_filtered(self) -> bool:
        return all(self.levels[t] <= self.levels[j] for j in range(len(self)) for t in self.boundary[j])

    def u_commutes(self) -> bool:
        for j in range(len(self)):
            lhs: set = set()
            uj = self.u_image(j)
            if uj is not None:
                lhs = set(self.boundary[uj])
            rhs: set = set()
            for t in self.boundary[j]:
                ut = self.u_image(t)
                if ut is not None:
                    rhs ^= {ut}
            if lhs != rhs:
                return False
        return True

    # --- persistence ------------------------------------------------------
    @cached_property
    def _order(self) -> tuple[list[int], list[int]]:
        # odd (never a source) before even inside a level, so the order is triangular
        order = sorted(range(len(self)), key=lambda j: (self.levels[j], self.labels[j][1] % 2 == 0, j))
        pos = [0] * len(self)
        for p, j in enumerate(order):
            pos[j] = p
        for j in range(len(self)):
            for t in self.boundary[j]:
                if pos[t] >= pos[j]:
                    raise ConventionError(f"boundary of {self.labels[j]} is not earlier in the filtration order")
        return order, pos

    @cached_property
    def _reduction(self):
        order, pos = self._order
        pivots: dict[int, int] = {}
        cycles: dict[int, int] = {}
        for p, j in enumerate(order):
            col = 0
            for t in self.boundary[j]:
                col ^= 1 << pos[t]
            v = 1 << p
            while col:
                low = col.bit_length() - 1
                hit = pivots.get(low)
                if hit is None:
                    break
                col ^= hit[0]
                v ^= hit[1]
            if col:
                pivots[col.bit_length() - 1] = (col, v)
            else:
                cycles[p] = v
        essential = {p: v for p, v in cycles.items() if p not in pivots}
        return pivots, essential

    def _chain_mask(self, indices) -> int:
        _, pos = self._order
        mask = 0
        for j in indices:
            mask ^= 1 << pos[j]
        return mask

    def _indices(self, mask: int) -> list[int]:
        order, _ = self._order
        out = []
        while mask:
            low = mask & -mask
            out.append(order[low.bit_length() - 1])
            mask ^= low
        return out

    def _shift(self, mask: int, k: int) -> int:
        out = []
        for j in self._indices(mask):
            n, m = self.labels[j]
            t = self.index.get((n + k, m))
            if t is not None:
                out.append(t)
        return self._chain_mask(out)

    def _birth_position(self, mask: int) -> Optional[int]:
        """Largest essential position in the class of the cycle ``mask`` (None if it is a boundary)."""
        pivots, essential = self._reduction
        while mask:
            low = mask.bit_length() - 1
            hit = pivots.get(low)
            if hit is not None:
                mask ^= hit[0]
            elif low in essential:
                return low
            else:
                raise ConventionError("chain passed to the homology reduction is not a cycle")
        return None

    def birth(self, chain) -> Optional[int]:
        """Least level ``i`` such that the class of ``chain`` comes from ``A_i`` (None: zero class)."""
        p = self._birth_position(self._chain_mask(chain))
        if p is None:
            return None
        order, _ = self._order
        return self.levels[order[p]]

    def is_cycle(self, chain) -> bool:
        acc: set = set()
        for j in chain:
            acc ^= set(self.boundary[j])
        return not acc

    def u_order(self, chain) -> int:
        """Least ``k`` with ``U^k [chain] = 0``."""
        mask = self._chain_mask(chain)
        lo, hi = 0, self.N
        while lo < hi:
            mid = (lo + hi) // 2
            if self._birth_position(self._shift(mask, mid)) is None:
                hi = mid
            else:
                lo = mid + 1
        return lo

    @cached_property
    def homology_rank(self) -> int:
        return len(self._reduction[1])

    @cached_property
    def tower_generator(self) -> tuple[int, ...]:
        """A cycle whose class has maximal U-order."""
        _, essential = self._reduction
        # newest classes first: the generator is usually born at the top
        best, best_order = None, -1
        for p in sorted(essential, reverse=True):
            mask = essential[p]
            if self._birth_position(self._shift(mask, self.N - 1)) is not None:
                best, best_order = mask, self.N
                break
        if best is None:
            for p in essential:
                k = self.u_order(self._indices(essential[p]))
                if k > best_order:
                    best, best_order = essential[p], k
        if best is None or 2 * best_order < self.N:
            raise TruncationError(
                f"no homology class of U-order >= N/2 = {self.N / 2}; truncation N={self.N} too small"
            )
        return tuple(self._indices(best))

    @cached_property
    def _tower_births(self) -> list:
        return []

    @cached_property
    def _generator_mask(self) -> int:
        return self._chain_mask(self.tower_generator)

    def tower_birth(self, v: int) -> Optional[int]:
        """Birth level of ``U^v`` times the tower generator."""
        births = self._tower_births
        while len(births) <= v:
            p = self._birth_position(self._shift(self._generator_mask, len(births)))
            births.append(None if p is None else self.levels[self._order[0][p]])
        return births[v]


def build_tensor_complex(gK: EnumeratingFunction, sL: StaircaseDescriptor, N: Optional[int] = None) -> FilteredUComplex:
    floor = min_truncation(gK, sL)
    if N is None:
        N = floor
    if N < floor:
        raise PreconditionError(f"truncation N={N} is below the floor 2(delta_K + delta_L) + 8 = {floor}")
    model = mirror_model(sL)
    W = model.size
    gam = gK.values(N - 1)
    labels, levels, boundary = [], [], []
    for n in range(N):
        for m in range(W):
            labels.append((n, m))
            levels.append(gK.delta - int(gam[n]) - model.alpha[m])
            terms = []
            for t, h in model.differential[m]:
                if n + h < N:
                    terms.append((n + h) * W + t)
            boundary.append(tuple(terms))
    return FilteredUComplex(tuple(labels), tuple(levels), tuple(boundary), N)


def sublevel(c: FilteredUComplex, i: int) -> FilteredUComplex:
    """Subcomplex spanned by basis elements of level ``<= i``."""
    keep = [j for j in range(len(c)) if c.levels[j] <= i]
    new = {j: k for k, j in enumerate(keep)}
    boundary = []
    for j in keep:
        missing = [c.labels[t] for t in c.boundary[j] if t not in new]
        if missing:
            raise ConventionError(
                f"sublevel {i} is not a subcomplex: d{c.labels[j]} hits {missing}; filtration convention is broken"
            )
        boundary.append(tuple(new[t] for t in c.boundary[j]))
    return FilteredUComplex(
        tuple(c.labels[j] for j in keep), tuple(c.levels[j] for j in keep), tuple(boundary), c.N
    )


def v_at(c: FilteredUComplex, i: int) -> int:
    """``V_i``: least ``v`` with ``U^v [tower]`` in the image of ``H(A_i) -> H(C)``."""
    if i < -1:
        raise PreconditionError("v_at is defined for i >= -1")
    v = 0
    while True:
        b = c.tower_birth(v)
        if b is None or b <= i:
            return v
        v += 1


def v_sequence_oracle(gK: EnumeratingFunction, sL: StaircaseDescriptor, N: Optional[int] = None) -> VSequence:
    c = build_tensor_complex(gK, sL, N)
    values = []
    i = 0
    while True:
        v = v_at(c, i)
        values.append(v)
        if v == 0:
            break
        i += 1
    return VSequence(tuple(values))
