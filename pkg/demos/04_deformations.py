"""Can the cusp singularity of T(6,7) deform to that of T(4,9)?"""
import numpy as np

from nuplus import nu_plus_sum, semicontinuity, torus_semigroup as T
from nuplus.checks import counts

K, L = T(6, 7), T(4, 9)

# A deformation gives a cobordism of genus delta_K - delta_L = 3.
print("genus budget:", K.delta - L.delta)
print("nu+(K # mL) :", nu_plus_sum(K, L))

# The same obstruction read off the counting functions: R_K(n) <= R_L(n) fails.
n = np.arange(0, 12)
print("n    ", n)
print("R_K  ", counts(K, n))
print("R_L  ", counts(L, n))

report = semicontinuity(K, L)
print(report.verdict, report.reason, report.witness)

# Going from a knot to itself or to a simpler one is not obstructed.
print(semicontinuity(T(2, 5), T(2, 3)).verdict)
