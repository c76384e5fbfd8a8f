"""Geometric bounds derived from nu+ and V-sequences.

Cobordism genus, Gordian distance, unknotting-type invariants, the genus
inequality ``V_{m+g}(K) <= V_m(L)`` for a genus-``g`` cobordism, subadditivity
checks, and the semigroup semicontinuity obstruction to deformations of cusps.

Crossing-change monotonicity is not modelled as a separate operation: a crossing
change gives a genus-1 cobordism, so :func:`check_genus_inequality` with ``g = 1``
is the computable consequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import PreconditionError
from .nu_plus import VSequence, nu_plus_sum, v_sequence_single, v_sequence_sum
from .semigroups import EnumeratingFunction, counting

__all__ = [
    "ConcordanceBounds",
    "GenusCheck",
    "ObstructionReport",
    "check_genus_inequality",
    "cobordism_genus_bound",
    "concordance_bounds",
    "gordian_bound",
    "semicontinuity",
    "semicontinuity_violation",
    "subadditivity_check",
]


def cobordism_genus_bound(gK: EnumeratingFunction, gL: EnumeratingFunction) -> int:
    """Lower bound on the genus of any cobordism between ``K`` and ``L``."""
    return max(nu_plus_sum(gK, gL), nu_plus_sum(gL, gK))


def gordian_bound(gK: EnumeratingFunction, gL: EnumeratingFunction) -> int:
    """Lower bound on the number of crossing changes turning ``K`` into ``L``."""
    return nu_plus_sum(gK, gL) + nu_plus_sum(gL, gK)


@dataclass(frozen=True)
class ConcordanceBounds:
    """Common lower bound for ``u``, ``u_c``, ``u_s`` and ``c*`` of ``K # mirror L``."""

    unknotting: int
    concordance_unknotting: int
    slicing: int
    four_ball_crossing: int

    def to_dict(self) -> dict:
        return {"u": self.unknotting, "u_c": self.concordance_unknotting,
                "u_s": self.slicing, "c_star": self.four_ball_crossing}


def concordance_bounds(gK: EnumeratingFunction, gL: EnumeratingFunction) -> ConcordanceBounds:
    b = gordian_bound(gK, gL)
    return ConcordanceBounds(b, b, b, b)


@dataclass(frozen=True)
class GenusCheck:
    holds: bool
    violation: Optional[int]
    nu_consistent: bool

    def __bool__(self) -> bool:
        return self.holds


def check_genus_inequality(vK: VSequence, vL: VSequence, g: int) -> GenusCheck:
    """Check ``V_{m+g}(K) <= V_m(L)`` for all ``m``; returns the first violating ``m``.

    Also reports the consequence ``nu+(K) <= nu+(L) + g``.
    """
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    support = max(len(vK.values), len(vL.values))
    violation = next((m for m in range(support) if vK[m + g] > vL[m]), None)
    return GenusCheck(violation is None, violation, vK.nu_plus <= vL.nu_plus + g)


def subadditivity_check(gK: EnumeratingFunction, gL: EnumeratingFunction) -> bool:
    """``nu+(K # mirror L) <= nu+(K) + nu+(mirror L)`` with ``nu+(mirror L) = 0``.

    The V-level statement ``V_{m+n}(K # L') <= V_m(K) + V_n(L')`` is checked at
    ``n = 0``, where every ``V_n(mirror L)`` vanishes.
    """
    vsum = v_sequence_sum(gK, gL)
    vK = v_sequence_single(gK)
    if nu_plus_sum(gK, gL) > vK.nu_plus:
        return False
    return all(vsum[m] <= vK[m] for m in range(len(vsum.values)))


@dataclass(frozen=True)
class ObstructionReport:
    verdict: str
    reason: str
    witness: dict = field(default_factory=dict)
    delta_k: int = 0
    delta_l: int = 0
    genus_budget: int = 0
    nu_kl: int = 0
    nu_lk: int = 0

    @property
    def obstructed(self) -> bool:
        return self.verdict == "obstructed"

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": dict(self.witness) or None,
            "delta_k": self.delta_k,
            "delta_l": self.delta_l,
            "genus_budget": self.genus_budget,
            "nu_kl": self.nu_kl,
            "nu_lk": self.nu_lk,
        }


def semicontinuity_violation(gK: EnumeratingFunction, gL: EnumeratingFunction, upto: int) -> Optional[int]:
    """First ``n`` in ``[0, upto]`` with ``R_K(n) > R_L(n)``."""
    return next((n for n in range(upto + 1) if counting(gK, n) > counting(gL, n)), None)


def semicontinuity(gK: EnumeratingFunction, gL: EnumeratingFunction) -> ObstructionReport:
    """Can the cusp with semigroup ``Gamma_K`` deform to one with ``Gamma_L``?

    Obstructed if the counting functions violate ``R_K(n) <= R_L(n)`` somewhere, or
    if the nu+ cobordism bound exceeds the genus ``delta_K - delta_L`` the
    deformation would produce.

    >>> from nuplus.semigroups import torus_semigroup as T
    >>> r = semicontinuity(T(6, 7), T(4, 9))
    >>> r.verdict, r.witness["n"], r.witness["genus_bound"]
    ('obstructed', 8, [4, 3])
    """
    if gK.delta < gL.delta:
        raise PreconditionError(
            f"delta_K={gK.delta} < delta_L={gL.delta}: a deformation cannot increase the delta-invariant"
        )
    budget = gK.delta - gL.delta
    nu_kl, nu_lk = nu_plus_sum(gK, gL), nu_plus_sum(gL, gK)
    witness: dict = {}
    # all gaps lie below 2*delta_K, so the comparison is stable past this range
    n = semicontinuity_violation(gK, gL, 2 * gK.delta + 1)
    if n is not None:
        witness["n"] = n
    bound = max(nu_kl, nu_lk)
    if bound > budget:
        witness["genus_bound"] = [bound, budget]
    if "n" in witness:
        reason = "semicontinuity"
    elif "genus_bound" in witness:
        reason = "genus_bound"
    else:
        reason = "none"
    return ObstructionReport(
        verdict="obstructed" if witness else "allowed",
        reason=reason,
        witness=witness,
        delta_k=gK.delta,
        delta_l=gL.delta,
        genus_budget=budget,
        nu_kl=nu_kl,
        nu_lk=nu_lk,
    )
