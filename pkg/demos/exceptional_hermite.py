"""Exceptional Hermite polynomials from a generating function.

The family misses degrees 1 and 2.  Three commuting operators in z have the
generating function as a common eigenfunction with eigenvalues in x; their
translations are recurrences that build the whole family from a_0 = 4.
"""
from genfun import commutator, diffop_eigencheck, sequence_from_series, translate
from genfun.examples import (
    XHP_L3,
    XHP_L4,
    XHP_L4_AS_PRINTED,
    XHP_LAMBDAS,
    lambda_ring_member,
    xhp_by_recurrence,
    xhp_recurrence_routes,
    xhp_series,
)
from genfun.ring import POLYX, format_poly

psi = xhp_series(14)
a = sequence_from_series(psi)
for n in range(8):
    print(f"a_{n} = {a[n]}")

print("\nEvery coefficient has a derivative divisible by 1 + 2x^2:",
      all(lambda_ring_member(t.value) for t in a))

print("\nEigenvalues and translated operators:")
for k, L in [(3, XHP_L3), (4, XHP_L4)]:
    lam = POLYX.poly(XHP_LAMBDAS[k])
    print(f"  lambda_{k} = {format_poly(XHP_LAMBDAS[k])}")
    print(f"  Omega_{k}  = {translate(L)}")
    print(f"  eigen equation holds: {diffop_eigencheck(L, psi, lam).holds}")

print("\n[L3, L4] vanishes:", commutator(XHP_L3, XHP_L4).is_zero())

# the z^2 reading of the d^2 coefficient in L4 breaks both checks
lam4 = POLYX.poly(XHP_LAMBDAS[4])
print("literal z^2 variant is an eigenoperator:", diffop_eigencheck(XHP_L4_AS_PRINTED, psi, lam4).holds)

print("\nRecurrence from a_0 = 4, a_1 = a_2 = 0:")
rec = xhp_by_recurrence(12)
print("  matches the series through a_12:", rec.terms == sequence_from_series(xhp_series(12)).terms)
routes = xhp_recurrence_routes(7)[7]
for (k, n), value in sorted(routes.items()):
    print(f"  a_7 from Omega_{k} at n={n}: {value}")
