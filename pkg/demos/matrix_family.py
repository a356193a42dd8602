"""Matrix-valued polynomials and a noncommutative coefficient ring.

The operator has 2x2 constant matrix coefficients.  The generating
function is an eigenfunction with eigenvalue x^3 times the identity, which
commutes with everything, so the check passes from either side.
"""
from genfun import Ring, diffop_eigencheck, parse_zpoly, sequence_from_series, series_from_prefactor_exp, translate
from genfun.examples import MATRIX_L
from genfun.ring import format_elem

M2 = Ring.parse("matrix:2")

prefactor = parse_zpoly("[[x*z - 1, -z^2], [0, x*z]]", M2)
exponent = parse_zpoly("x*z", M2)
psi = series_from_prefactor_exp(prefactor, exponent, 12)
a = sequence_from_series(psi)

for n in range(5):
    print(f"a_{n} = {format_elem(a[n])}")

print("\nL       =", MATRIX_L)
print("Omega_L =", translate(MATRIX_L))

lam = M2.x() ** 3
for side in ("left", "right"):
    print(f"{side:>5} eigen equation:", diffop_eigencheck(MATRIX_L, psi, lam, side).holds)

# a non-central eigenvalue would distinguish the sides
A = M2.matrix([[0, 1], [0, 0]])
B = M2.matrix([[0, 0], [1, 0]])
print("\nAB =", format_elem(A * B), " BA =", format_elem(B * A))
