"""Two infinite families where nu+ is large in both directions."""
from nuplus import nu_plus_sum, torus_semigroup as T
from nuplus.tables import family_p_values, reference_tables

# K = T(q(p+2), rp) and L = T(qp, r(p+2)) for p = -1 mod 2qr.
print(f"{'q':>2} {'r':>2} {'p':>4}  {'nu(K#mL)':>8} {'nu(L#mK)':>8} {'2qr-q-r':>7}")
for q, r in ((2, 3), (2, 5), (3, 4), (3, 5)):
    for p in family_p_values(q, r):
        K, L = T(q * (p + 2), r * p), T(q * p, r * (p + 2))
        print(f"{q:>2} {r:>2} {p:>4}  {nu_plus_sum(K, L):>8} {nu_plus_sum(L, K):>8} {2 * q * r - q - r:>7}")

# Every number in the tables, without the slow grid sweeps.
rows = reference_tables(include_grid=False)
print(sum(r.passed for r in rows), "of", len(rows), "rows pass")
