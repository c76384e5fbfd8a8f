"""Semigroups, gaps and Alexander polynomials of L-space knots."""
import numpy as np

from nuplus import (
    AlexanderVector,
    counting,
    from_alexander,
    from_generators,
    to_alexander,
    torus_semigroup,
    validate,
)

# The torus knot T(3,7) has semigroup <3,7>; Gamma enumerates it in order.
g = torus_semigroup(3, 7)
print(g.name, "delta =", g.delta)
print("Gamma(0..12) =", g.values(12))
print("gaps         =", g.gaps())

# Past delta, Gamma(n) = n + delta, so Gamma is a finite prefix plus a rule.
n = np.arange(g.delta, g.delta + 6)
print("tail rule holds:", bool(np.all(g.values(n[-1])[n] == n + g.delta)))

# Gap symmetry: m is in the semigroup exactly when 2*delta-1-m is not.
print(validate(g))

# More than two generators works as long as the semigroup is symmetric.
h = from_generators({4, 6, 13})
print(h.name, "delta =", h.delta, "gaps =", h.gaps())

# A non-symmetric semigroup is not the semigroup of any knot.
try:
    from_generators({3, 4, 5})
except ValueError as exc:
    print("rejected:", exc)

# The pretzel knot 12n242 = P(-2,3,7) is an L-space knot but not algebraic:
# its Gamma comes from the Alexander polynomial and is not closed under addition.
P = from_alexander(AlexanderVector((5, 4, 2, 1, 0, -1, -2, -4, -5)), label="12n242")
print("12n242 Gamma(0..7) =", [P(k) for k in range(8)])
print(validate(P).problems)

# Alexander polynomial exponents go back and forth losslessly.
print("T(4,5) exponents:", to_alexander(torus_semigroup(4, 5)).exponents)
print("round trip:", from_alexander(to_alexander(P)) == P)

# R(n) counts semigroup elements below n.
print("R_{T(6,7)}(8) =", counting(torus_semigroup(6, 7), 8))
