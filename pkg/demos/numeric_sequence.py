"""A rational sequence whose generating function is an eigenfunction.

(z - 1) e^z is fixed by L = d^2 - (2/z) d.  Translating L gives a
difference operator that leaves the coefficient sequence unchanged, so
the sequence satisfies a two-step recurrence.
"""
from genfun import (
    RATIONAL,
    deltaop_apply,
    diffop_eigencheck,
    lemma1_check,
    parse_diffop,
    sequence_from_series,
    series_from_prefactor_exp,
    translate,
)

ORDER = 12

L = parse_diffop("d^2 - 2*z^-1*d", RATIONAL)
psi = series_from_prefactor_exp([-1, 1], [0, 1], ORDER, ring=RATIONAL)
a = sequence_from_series(psi)

print("L         =", L)
print("Omega_L   =", translate(L))
print("a_0..a_8  =", ", ".join(str(t) for t in a.terms[:9]))

rep = diffop_eigencheck(L, psi, 1)
print(f"L(psi) = psi on exponents {rep.checked_range}: {rep.holds}")

W = translate(L)
print("\nOmega_L(a)_n next to a_n:")
for n in range(8):
    print(f"  n={n}:  {deltaop_apply(W, a, n)!s:>10}   {a[n]!s:>10}")

# the n = 1 coefficient of Omega_L vanishes, so the recurrence at n = 1 says nothing about a_3
print("\nn^2+n-2 at n=1 is", W.terms[2](1), "so a_3 has to come from the series, not the recurrence")

lem = lemma1_check(L, psi)
print(f"coefficientwise identity on {lem.range_checked}: {lem.holds}")
