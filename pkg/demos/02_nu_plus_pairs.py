"""nu+ of K # mirror(L) and the bounds it gives."""
from nuplus import (
    cobordism_genus_bound,
    concordance_bounds,
    gordian_bound,
    nu_plus_sum,
    staircase_from_gamma,
    surgery_d_invariants,
    torus_semigroup as T,
    tower_chain,
    v_sequence_single,
    v_sequence_sum,
)

# T(3,7) and T(4,5) have the same genus 6, but are not concordant:
K, L = T(3, 7), T(4, 5)
print("nu+(K # mL) =", nu_plus_sum(K, L), " nu+(L # mK) =", nu_plus_sum(L, K))

# The whole V-sequence, not only its first zero.
print("V(K # mL) =", v_sequence_sum(K, L).values)

# The staircase of L, and the cycle that generates the tower in K # mL.
s = staircase_from_gamma(L)
print("staircase of T(4,5): a =", s.a, " a' =", s.a_prime)
tc = tower_chain(K, s)
print("tower chain degrees", tc.degrees, "max M =", tc.M)

# Pairs with a large gap in both directions: genus and Gordian distance bounds.
p = 11
K, L = T(2 * p + 4, 3 * p), T(2 * p, 3 * p + 6)
print(K.name, L.name)
print("  nu+ both ways :", nu_plus_sum(K, L), nu_plus_sum(L, K))
print("  genus bound   :", cobordism_genus_bound(K, L))
print("  Gordian bound :", gordian_bound(K, L))
print("  concordance   :", concordance_bounds(K, L).to_dict())

# d-invariants of n-surgery on a single knot come straight from V.
for n in (1, 2, 3):
    d = surgery_d_invariants(v_sequence_single(T(2, 3)), n)
    print(f"d(S^3_{n}(T(2,3))) =", [str(x) for x in d])
